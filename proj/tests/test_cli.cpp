#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "qkz/basis.hpp"
#include "qkz/psivec.hpp"
#include "qkz/resulttable.hpp"
#include "qkz/sumrules.hpp"
#include "qkz/tilings.hpp"

using namespace qkz;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::string binary() {
    const char* b = std::getenv("QKZ_BIN");
    REQUIRE(b != nullptr);
    return std::string(b);
}

Run run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + "\"" + binary() + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    Run r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

const Record* row_for_pattern(const ResultTable& t, const std::vector<int>& pairing) {
    std::vector<long> want(pairing.begin(), pairing.end());
    for (const auto& rec : t.rows) {
        const Cell* c = rec.find("pattern");
        if (c && std::get<std::vector<long>>(*c) == want) return &rec;
    }
    return nullptr;
}

std::filesystem::path fresh_cache_dir() {
    auto p = std::filesystem::temp_directory_path() /
             ("qkz-cache-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("psi").code == 2);
    CHECK(run_cli("psi --size 1").code == 2);
    CHECK(run_cli("psi --size 10").code == 2);
    CHECK(run_cli("psi --size 4 --format yaml").code == 2);
    CHECK(run_cli("psi --size 4 --tau-at abc").code == 2);
    CHECK(run_cli("sumrule --n 2 --parity diagonal").code == 2);
    CHECK(run_cli("sumrule --n 5 --parity even").code == 2);
    CHECK(run_cli("sumrule --n 2 --parity even --t half").code == 2);
    CHECK(run_cli("verify --suite bogus").code == 2);
    CHECK(run_cli("lp list --size 0").code == 2);
    CHECK(run_cli("lp list --size 13").code == 2);
    CHECK(run_cli("oracle qkz --n 4").code == 2);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("pattern listing") {
    auto r = run_cli("lp list --size 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("4 sites, 2 patterns") != std::string::npos);
    CHECK(r.out.find("{(1,4),(2,3)}") != std::string::npos);
    CHECK(r.out.find("{(1,2),(3,4)}") != std::string::npos);

    auto odd = run_cli("lp list --size 3");
    CHECK(odd.code == 0);
    CHECK(odd.out.find("3 sites, 2 patterns") != std::string::npos);
    CHECK(odd.out.find("*") != std::string::npos);
}

TEST_CASE("four-site vector matches the library and round trips") {
    auto r = run_cli("psi --size 4 --format json");
    REQUIRE(r.code == 0);
    ResultTable t = from_json(r.out);
    CHECK(t.kind == "psi");
    REQUIRE(t.sizes.size() == 1);
    CHECK(t.sizes[0] == std::pair<std::string, long>("N", 4));
    CHECK(t.command == "psi --size 4");
    CHECK(t.engine == engine_version());
    REQUIRE(t.rows.size() == 2);
    CHECK(to_json(t) == r.out);

    PsiVector v = psi_even(2);
    for (size_t i = 0; i < v.index.size(); ++i) {
        const Record* rec = row_for_pattern(t, v.index[i].pairing());
        REQUIRE(rec != nullptr);
        CHECK(std::get<std::vector<std::string>>(*rec->find("coeffs")) ==
              coeff_strings(v.components[i]));
        CHECK(std::get<std::string>(*rec->find("at_one")) ==
              v.components[i].eval(1).get_str());
        CHECK(std::get<long>(*rec->find("boxes")) == v.index[i].box_count());
        CHECK(std::get<long>(*rec->find("valuation")) == v.components[i].valuation());
        CHECK(std::get<long>(*rec->find("degree")) == v.components[i].degree());
    }
}

TEST_CASE("odd sizes and point evaluation") {
    auto r = run_cli("psi --size 3 --format json");
    REQUIRE(r.code == 0);
    ResultTable t = from_json(r.out);
    PsiVector v = psi_odd(1);
    REQUIRE(t.rows.size() == v.index.size());
    for (size_t i = 0; i < v.index.size(); ++i) {
        CHECK(std::get<std::vector<std::string>>(*t.rows[i].find("coeffs")) ==
              coeff_strings(v.components[i]));
        CHECK(t.rows[i].find("value") == nullptr);
    }

    auto at = run_cli("psi --size 4 --tau-at -2 --format json");
    REQUIRE(at.code == 0);
    ResultTable ta = from_json(at.out);
    CHECK(ta.command == "psi --size 4 --tau-at -2");
    PsiVector ve = psi_even(2);
    for (size_t i = 0; i < ve.index.size(); ++i) {
        const Record* rec = row_for_pattern(ta, ve.index[i].pairing());
        REQUIRE(rec != nullptr);
        CHECK(std::get<std::string>(*rec->find("value")) ==
              ve.components[i].eval(Int(-2)).get_str());
    }
}

TEST_CASE("output does not depend on run or worker count") {
    auto a = run_cli("psi --size 6 --format json --jobs 1");
    auto b = run_cli("psi --size 6 --format json --jobs 3");
    auto c = run_cli("psi --size 6 --format json --jobs 3");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);

    auto v1 = run_cli("verify --max-n 2 --suite tl --suite basis --format json --jobs 1");
    auto v2 = run_cli("verify --max-n 2 --suite tl --suite basis --format json --jobs 2");
    REQUIRE(v1.code == 0);
    CHECK(v1.out == v2.out);
}

TEST_CASE("cache reload, audit, and healing") {
    auto dir = fresh_cache_dir();
    std::string env = "QKZ_CACHE_DIR=\"" + dir.string() + "\" ";

    auto plain = run_cli("psi --size 4 --format json");
    auto first = run_cli("psi --size 4 --format json", env);
    REQUIRE(first.code == 0);
    CHECK(first.out == plain.out);

    std::filesystem::path entry;
    for (const auto& f : std::filesystem::directory_iterator(dir))
        if (f.path().filename().string().rfind("psi-n4", 0) == 0) entry = f.path();
    REQUIRE(!entry.empty());

    auto second = run_cli("psi --size 4 --format json", env);
    CHECK(second.code == 0);
    CHECK(second.out == first.out);

    auto audited = run_cli("psi --size 4 --format json --verify-cache", env);
    CHECK(audited.code == 0);
    CHECK(audited.out == first.out);

    // a poisoned but well-formed entry is served on reload and caught by audit
    auto text = read_text_file(entry.string());
    REQUIRE(text.has_value());
    std::string tampered = *text;
    auto at = tampered.find("[\"0\",\"1\"]");
    REQUIRE(at != std::string::npos);
    tampered.replace(at, 9, "[\"0\",\"9\"]");
    {
        std::ofstream out(entry, std::ios::binary | std::ios::trunc);
        out << tampered;
    }
    auto served = run_cli("psi --size 4 --format json", env);
    CHECK(served.code == 0);
    CHECK(served.out != first.out);
    auto caught = run_cli("psi --size 4 --format json --verify-cache", env);
    CHECK(caught.code == 1);

    // an unreadable entry is recomputed and replaced
    {
        std::ofstream out(entry, std::ios::binary | std::ios::trunc);
        out << "not a table";
    }
    auto healed = run_cli("psi --size 4 --format json", env);
    CHECK(healed.code == 0);
    CHECK(healed.out == first.out);
    auto reaudit = run_cli("psi --size 4 --format json --verify-cache", env);
    CHECK(reaudit.code == 0);

    std::filesystem::remove_all(dir);
}

TEST_CASE("sum rule output carries both routes") {
    auto r = run_cli("sumrule --n 2 --parity even --format json");
    REQUIRE(r.code == 0);
    ResultTable t = from_json(r.out);
    CHECK(t.kind == "sumrule");
    REQUIRE(t.rows.size() >= 3);
    auto grid = grid_strings(gen_direct(2, Parity::Even));
    CHECK(std::get<std::string>(*t.rows[0].find("route")) == "direct");
    CHECK(std::get<std::vector<std::vector<std::string>>>(*t.rows[0].find("grid")) == grid);
    CHECK(std::get<std::string>(*t.rows[1].find("route")) == "determinant");
    CHECK(std::get<std::vector<std::vector<std::string>>>(*t.rows[1].find("grid")) == grid);
    CHECK(std::get<std::string>(*t.rows[2].find("convention")) == "identity");

    auto odd = run_cli("sumrule --n 1 --parity odd --format json");
    REQUIRE(odd.code == 0);
    ResultTable to = from_json(odd.out);
    using Grid = std::vector<std::vector<std::string>>;
    CHECK(std::get<Grid>(*to.rows[0].find("grid")) == Grid{{"0", "1"}, {"1", "0"}});
    CHECK(std::get<Grid>(*to.rows[1].find("grid")) == Grid{{"1", "0"}, {"0", "1"}});
    CHECK(std::get<std::string>(*to.rows[2].find("convention")) == "t-reversal");

    auto spot = run_cli("sumrule --n 3 --parity even --t 1 --format json");
    REQUIRE(spot.code == 0);
    ResultTable ts = from_json(spot.out);
    bool saw = false;
    for (const auto& rec : ts.rows)
        if (const Cell* c = rec.find("specialization");
            c && std::get<std::string>(*c) == "t=1") {
            saw = true;
            CHECK(std::get<std::string>(*rec.find("at_one")) == "26");
        }
    CHECK(saw);
}

TEST_CASE("verify command reports and exits by outcome") {
    auto r = run_cli("verify --max-n 1 --suite tl --suite lemmas");
    CHECK(r.code == 0);
    CHECK(r.out.find("status: pass") != std::string::npos);
    CHECK(r.out.find("status: fail") == std::string::npos);

    auto j = run_cli("verify --max-n 2 --suite oracle --format json");
    CHECK(j.code == 0);
    CHECK(j.out.find("global factor") != std::string::npos);
}

TEST_CASE("oracle subcommands") {
    auto vs = run_cli("oracle vsasm --size 5");
    CHECK(vs.code == 0);
    CHECK(vs.out == "3\n");
    CHECK(run_cli("oracle vsasm --size 4").code == 2);

    auto ni = run_cli("oracle nilp --b 1,2");
    CHECK(ni.code == 0);
    CHECK(ni.out == "1\n");
    auto ni2 = run_cli("oracle nilp --b 1,3,4");
    CHECK(ni2.code == 0);
    CHECK(ni2.out == "2\n");
    CHECK(run_cli("oracle nilp --b 2,3").code == 2);

    auto ar = run_cli("oracle arrays --n 3 --variant 1");
    CHECK(ar.code == 0);
    CHECK(ar.out.find("total 26") != std::string::npos);
    CHECK(ar.out.find(t_poly(3, 1).str("x")) != std::string::npos);

    auto qk = run_cli("oracle qkz --n 1");
    CHECK(qk.code == 0);
    CHECK(qk.out.find("global factor") != std::string::npos);
    CHECK(qk.out.find("FAIL") == std::string::npos);
}

TEST_CASE("table serialization round trips every cell kind") {
    ResultTable t;
    t.kind = "matrix";
    t.sizes = {{"n", 3}, {"rows", 5}};
    t.command = "basis --n 3";
    t.engine = engine_version();
    Record r1;
    r1.put("count", long(-17));
    r1.put("note", std::string("a,b \"quoted\"\nline"));
    r1.put("pairing", std::vector<long>{2, 1, 0});
    r1.put("coeffs", std::vector<std::string>{"-1", "0", "12345678901234567890"});
    r1.put("grid", std::vector<std::vector<std::string>>{{"1", "0"}, {"0", "1"}});
    t.rows.push_back(r1);
    Record r2;
    r2.put("empty", std::vector<long>{});
    r2.put("also_empty", std::vector<std::string>{});
    t.rows.push_back(r2);

    std::string text = to_json(t);
    ResultTable back = from_json(text);
    CHECK(back == t);
    CHECK(to_json(back) == text);
    CHECK(table_hash(back) == table_hash(t));

    ResultTable other = t;
    other.rows[0].put("count", long(-18));
    CHECK(table_hash(other) != table_hash(t));

    // the flat views accept heterogeneous rows
    CHECK(to_csv(t).find("\"a,b \"\"quoted\"\"") != std::string::npos);
    CHECK(to_pretty(t).find("count: -17") != std::string::npos);
}

TEST_CASE("malformed tables are rejected") {
    CHECK_THROWS_AS(from_json("not json"), std::runtime_error);
    CHECK_THROWS_AS(from_json("{}"), std::runtime_error);
    CHECK_THROWS_AS(from_json(R"({"schema_version":1,"kind":"surprise","sizes":{},)"
                              R"("provenance":{"command":"","engine":""},"rows":[]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(from_json(R"({"schema_version":1,"kind":"psi","sizes":{},)"
                              R"("provenance":{"command":"","engine":""},)"
                              R"("rows":[{"mixed":[1,"two"]}]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(from_json(R"({"schema_version":"one","kind":"psi","sizes":{},)"
                              R"("provenance":{"command":"","engine":""},"rows":[]})"),
                    std::runtime_error);
}

TEST_CASE("polynomial encodings round trip") {
    TauPoly p = TauPoly::monomial(3, 4) - TauPoly::monomial(2, 1) + TauPoly(1);
    CHECK(tau_from_strings(coeff_strings(p)) == p);
    CHECK(coeff_strings(TauPoly()) == std::vector<std::string>{"0"});
    CHECK(tau_from_strings({"0"}) == TauPoly());

    BiPoly b = BiPoly::t_term(TauPoly::tau(), 2) + BiPoly(TauPoly(5)) -
               BiPoly::t_term(TauPoly::monomial(7, 3), 1);
    CHECK(bipoly_from_grid(grid_strings(b)) == b);
    CHECK(grid_strings(BiPoly()) == std::vector<std::vector<std::string>>{{"0"}});

    auto C = build_matrix(2);
    ResultTable mt = make_matrix_table(C);
    CHECK(mt.kind == "matrix");
    ResultTable back = from_json(to_json(mt));
    CHECK(back == mt);
}

TEST_CASE("atomic writes land complete files") {
    auto dir = fresh_cache_dir();
    auto path = (dir / "drop.txt").string();
    CHECK(!read_text_file(path).has_value());
    write_text_atomic(path, "first\n");
    CHECK(read_text_file(path) == std::optional<std::string>("first\n"));
    write_text_atomic(path, "second\n");
    CHECK(read_text_file(path) == std::optional<std::string>("second\n"));
    for (const auto& f : std::filesystem::directory_iterator(dir))
        CHECK(f.path().filename().string().find(".tmp-") == std::string::npos);
    std::filesystem::remove_all(dir);
}
