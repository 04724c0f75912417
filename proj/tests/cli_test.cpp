#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "cyclesteg/methods.hpp"
#include "cyclesteg/png_io.hpp"
#include "test_support.hpp"

using namespace cyclesteg;

namespace {

struct RunResult {
  int status;
  std::string out;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RunResult run(const testing::TempDir& dir, const std::string& args) {
  const auto out = dir / "stdout.txt";
  const std::string cmd =
      std::string(CYCLESTEG_CLI) + " " + args + " > '" + out.string() + "' 2>&1";
  const int raw = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(raw));
  return {WEXITSTATUS(raw), slurp(out)};
}

std::string q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("embed and extract round trip for every method") {
  testing::TempDir dir;
  save_image(testing::synthetic_photo(256, 256, 5), dir / "cover.png");
  for (std::string method : {"lsb", "karim", "cyclic"}) {
    const std::string key = method == "karim" ? " --key 9f3a" : "";
    const auto stego = dir / (method + ".png");
    const auto recovered = dir / (method + ".bin");
    auto e = run(dir, "embed --cover " + q(dir / "cover.png") + " --text B --method " + method +
                          key + " --out " + q(stego));
    REQUIRE_MESSAGE(e.status == 0, e.out);
    CHECK(e.out.find("bits_embedded=40") != std::string::npos);
    CHECK(e.out.find("samples_changed=") != std::string::npos);
    CHECK(e.out.find("psnr_db=") != std::string::npos);
    auto x = run(dir, "extract --stego " + q(stego) + " --method " + method + key + " --out " +
                          q(recovered));
    REQUIRE_MESSAGE(x.status == 0, x.out);
    CHECK(slurp(recovered) == "B");
  }
}

TEST_CASE("embed from a data file at full capacity") {
  testing::TempDir dir;
  save_image(testing::synthetic_photo(64, 64, 6), dir / "cover.png");  // 508 message bytes
  std::mt19937_64 rng(6);
  const Bytes data = testing::random_bytes(rng, 508);
  std::ofstream(dir / "data.bin", std::ios::binary)
      .write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  auto e = run(dir, "embed --cover " + q(dir / "cover.png") + " --data " + q(dir / "data.bin") +
                        " --method cyclic --out " + q(dir / "s.png"));
  REQUIRE_MESSAGE(e.status == 0, e.out);
  auto x = run(dir, "extract --stego " + q(dir / "s.png") + " --method cyclic --out " +
                        q(dir / "r.bin"));
  REQUIRE(x.status == 0);
  CHECK(slurp(dir / "r.bin") == std::string(data.begin(), data.end()));

  std::ofstream(dir / "big.bin", std::ios::binary) << std::string(509, 'x');
  auto big = run(dir, "embed --cover " + q(dir / "cover.png") + " --data " + q(dir / "big.bin") +
                          " --method cyclic --out " + q(dir / "t.png"));
  CHECK(big.status == 4);
}

TEST_CASE("error exit codes") {
  testing::TempDir dir;
  save_image(testing::synthetic_photo(16, 16, 7), dir / "cover.png");
  const std::string cover = q(dir / "cover.png");

  CHECK(run(dir, "embed --cover " + cover + " --text hi --method karim --out " +
                     q(dir / "o.png")).status == 5);
  CHECK(run(dir, "embed --cover " + cover + " --text hi --method lsb --key ab --out " +
                     q(dir / "o.png")).status == 5);
  CHECK(run(dir, "embed --cover " + cover + " --text hi --method karim --key zz --out " +
                     q(dir / "o.png")).status == 5);
  CHECK(run(dir, "embed --cover " + q(dir / "nope.png") + " --text hi --method lsb --out " +
                     q(dir / "o.png")).status == 2);
  CHECK(run(dir, "embed --cover '" CYCLESTEG_FIXTURES "/not_a_png.png' --text hi --method lsb "
                 "--out " + q(dir / "o.png")).status == 3);
  CHECK(run(dir, "embed --cover " + cover + " --method lsb --out " + q(dir / "o.png")).status == 1);
  CHECK(run(dir, "embed --cover " + cover + " --text x --method dct --out " + q(dir / "o.png"))
            .status == 1);
  CHECK(run(dir, "frobnicate").status == 1);

  auto help = run(dir, "--help");
  CHECK(help.status == 0);
  CHECK(help.out.find("Exit codes") != std::string::npos);
}

TEST_CASE("extract from a pristine image") {
  testing::TempDir dir;
  // All-odd samples decode to a header of 0xFFFFFFFF bytes.
  save_image(RgbImage(16, 16, 255, 255, 255), dir / "white.png");
  auto r = run(dir, "extract --stego " + q(dir / "white.png") + " --method cyclic --out " +
                        q(dir / "o.bin"));
  CHECK(r.status == 6);

  save_image(RgbImage(16, 16, 0, 0, 0), dir / "black.png");
  auto z = run(dir, "extract --stego " + q(dir / "black.png") + " --method lsb --out " +
                        q(dir / "z.bin"));
  CHECK(z.status == 0);
  CHECK(slurp(dir / "z.bin").empty());
}

TEST_CASE("extract with the wrong method does not crash") {
  testing::TempDir dir;
  save_image(testing::synthetic_photo(64, 64, 8), dir / "cover.png");
  REQUIRE(run(dir, "embed --cover " + q(dir / "cover.png") + " --text secret --method cyclic --out " +
                       q(dir / "s.png")).status == 0);
  for (std::string wrong : {"lsb", "karim --key 1"}) {
    auto r = run(dir, "extract --stego " + q(dir / "s.png") + " --method " + wrong + " --out " +
                          q(dir / "o.bin"));
    CHECK((r.status == 0 || r.status == 6));
  }
}

TEST_CASE("eval") {
  testing::TempDir dir;
  save_image(RgbImage(1, 1, 143, 10, 10), dir / "c.png");
  save_image(RgbImage(1, 1, 142, 10, 10), dir / "s.png");
  save_image(RgbImage(2, 1), dir / "wide.png");

  auto same = run(dir, "eval --cover " + q(dir / "c.png") + " --stego " + q(dir / "c.png"));
  REQUIRE(same.status == 0);
  CHECK(same.out.find("MSE: 0\n") != std::string::npos);
  CHECK(same.out.find("PSNR: inf") != std::string::npos);

  auto paper = run(dir, "eval --cover " + q(dir / "c.png") + " --stego " + q(dir / "s.png") +
                            " --cmax paper");
  REQUIRE(paper.status == 0);
  CHECK(paper.out.find("MSE: 0.3333333333333333") != std::string::npos);
  CHECK(paper.out.find("PSNR: 47.87793329649") != std::string::npos);
  CHECK(paper.out.find("Cmax: 143 (paper)") != std::string::npos);
  CHECK(paper.out.find("Histogram L1: R 2, G 0, B 0, total 2") != std::string::npos);

  auto fixed = run(dir, "eval --cover " + q(dir / "c.png") + " --stego " + q(dir / "s.png"));
  CHECK(fixed.out.find("PSNR: 52.90201615587") != std::string::npos);

  CHECK(run(dir, "eval --cover " + q(dir / "c.png") + " --stego " + q(dir / "wide.png")).status == 7);
}

TEST_CASE("hist") {
  testing::TempDir dir;
  save_image(RgbImage(2, 2, 1, 2, 3), dir / "x.png");
  auto r = run(dir, "hist --image " + q(dir / "x.png") + " --out " + q(dir / "h.csv"));
  REQUIRE(r.status == 0);
  const std::string csv = slurp(dir / "h.csv");
  CHECK(csv.starts_with("channel,bin,count\n"));
  CHECK(csv.find("red,1,4\n") != std::string::npos);
  CHECK(csv.find("blue,3,4\n") != std::string::npos);
}

TEST_CASE("bench") {
  testing::TempDir dir;
  save_image(testing::synthetic_photo(256, 256, 9), dir / "photo.png");
  save_image(testing::synthetic_photo(128, 128, 9), dir / "small.png");
  auto csv = run(dir, "bench --mode cipher --images " + q(dir / "photo.png") +
                          " --sizes-kb 2,4,6,8 --seed 7 --format csv");
  REQUIRE_MESSAGE(csv.status == 0, csv.out);
  CHECK(csv.out.starts_with(
      "Cipher size (KB),lsb_psnr_db,lsb_mse,karim_psnr_db,karim_mse,cyclic_psnr_db,cyclic_mse\n"));
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 5);
  CHECK(csv.out.find("error") == std::string::npos);

  auto md = run(dir, "bench --mode images --images " + q(dir / "photo.png") + " " +
                         q(dir / "small.png") + " --sizes-kb 1 --format md --cmax paper");
  REQUIRE_MESSAGE(md.status == 0, md.out);
  CHECK(md.out.find("| photo.png") != std::string::npos);
  CHECK(md.out.find("| small.png") != std::string::npos);

  auto sizes = run(dir, "bench --mode sizes --images " + q(dir / "small.png") + " " +
                            q(dir / "photo.png") + " --key abc");
  REQUIRE_MESSAGE(sizes.status == 0, sizes.out);
  CHECK(sizes.out.find("\n128x128,") != std::string::npos);
  CHECK(sizes.out.find("\n256x256,") != std::string::npos);

  CHECK(run(dir, "bench --mode cipher --images " + q(dir / "photo.png") + " " +
                     q(dir / "small.png")).status == 1);
  CHECK(run(dir, "bench --mode warp --images " + q(dir / "photo.png")).status == 1);
}
