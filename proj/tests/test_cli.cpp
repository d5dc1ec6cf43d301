#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef JACKSHAPE_BIN
#error "JACKSHAPE_BIN must name the CLI executable"
#endif

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args)
{
    std::string cmd = std::string(JACKSHAPE_BIN) + " " + args + " 2>/dev/null";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli: Plancherel moment")
{
    auto r = run("moments --ell 4 --g 1/2 --plancherel");
    CHECK(r.code == 0);
    CHECK(r.out == "9/4\n");
    auto j = nlohmann::json::parse(run("--json moments --ell 4 --g 1/2 --plancherel").out);
    CHECK(j["value"] == "9/4");
}

TEST_CASE("cli: Bessel zeros")
{
    auto r = run("--json bessel-zeros --g -1/4 -n 3");
    CHECK(r.code == 0);
    auto z = nlohmann::json::parse(r.out)["zeros"].get<std::vector<double>>();
    REQUIRE(z.size() == 3u);
    CHECK(z[0] == doctest::Approx(-1.086).epsilon(1e-3));
    CHECK(z[1] == doctest::Approx(-0.424).epsilon(1e-3));
    CHECK(z[2] == doctest::Approx(0.102).epsilon(1e-2));
}

TEST_CASE("cli: verify")
{
    CHECK(run("verify --suite normalization --d 6").code == 0);
    CHECK(run("verify --suite no-such-suite").code == 2);
}

TEST_CASE("cli: usage errors exit with status 2")
{
    CHECK(run("").code == 2);
    CHECK(run("moments --ell 3 --g one-half").code == 2);
    CHECK(run("moments --bogus").code == 2);
    CHECK(run("sample --method sometimes").code == 2);
}

TEST_CASE("cli: runtime failures exit with status 1")
{
    CHECK(run("sample --ensemble conditional-thoma --alpha 2 --d 6 --v 1,1/3 --n 3").code == 1);
}

TEST_CASE("cli: output is byte-stable")
{
    const std::string args = "--json sample --alpha 1/2 --d 12 --n 50 --seed 17 --out -";
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"type\":\"run\"") != std::string::npos);
    CHECK(run(args).out != run("--json sample --alpha 1/2 --d 12 --n 50 --seed 18 --out -").out);
    auto c = run("limit-shape --g -1/4 --steps 6 --csv -"), d = run("limit-shape --g -1/4 --steps 6 --csv -");
    CHECK(c.out == d.out);
    CHECK(c.out.rfind("x,omega\n", 0) == 0);
}

TEST_CASE("cli: render emits SVG")
{
    auto r = run("render --g -1/4 --steps 6");
    CHECK(r.code == 0);
    CHECK(r.out.find("<svg") != std::string::npos);
    CHECK(r.out.find("</svg>") != std::string::npos);
}

TEST_CASE("cli: polynomial output")
{
    auto r = run("moments --ell 4 --plancherel --poly");
    CHECK(r.out == "2 + g^2\n");
}
