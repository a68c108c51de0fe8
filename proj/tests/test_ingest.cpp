#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "encap/error.hpp"
#include "encap/ingest.hpp"
#include "encap/verify.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

using namespace encap;
namespace fs = std::filesystem;

namespace {

UnitGraph parse(const std::string& text) {
    std::istringstream in(text);
    return read_manifest(in);
}

ManifestError parse_error(const std::string& text) {
    try {
        parse(text);
    } catch (const ManifestError& e) {
        return e;
    }
    FAIL("expected a ManifestError");
    return ManifestError(0, "", "");
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("encap_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }

    void write(const std::string& rel, const std::string& text) const {
        fs::create_directories((path_ / rel).parent_path());
        std::ofstream(path_ / rel, std::ios::binary) << text;
    }

private:
    fs::path path_;
};

}  // namespace

TEST_CASE("read_manifest") {
    const UnitGraph g = parse("unit,region,violational\na,r1,1\nb,r1,0\nc,r2,1\nd,r2,0\n");
    CHECK(g == UnitGraph({{"a", "r1", true}, {"b", "r1", false}, {"c", "r2", true}, {"d", "r2", false}}));
    CHECK(g.units()[2].id == "c");

    SUBCASE("boolean spellings and CRLF") {
        const UnitGraph h = parse("unit,region,violational\r\na,r,TRUE\r\nb,r,False\r\nc,s,0\r\n");
        CHECK(h.units()[0].violational);
        CHECK_FALSE(h.units()[1].violational);
        CHECK_FALSE(h.units()[2].violational);
    }

    SUBCASE("quoted fields") {
        const UnitGraph h = parse("unit,region,violational\n\"a,b\",\"say \"\"hi\"\"\",1\n");
        CHECK(h.units()[0].id == "a,b");
        CHECK(h.units()[0].region == "say \"hi\"");
    }

    SUBCASE("no trailing newline") {
        CHECK(parse("unit,region,violational\na,r,1").size() == 1);
    }
}

TEST_CASE("read_manifest errors carry the row") {
    {
        const auto e = parse_error("unit,region,violational\n");
        CHECK(std::string(e.what()).find("empty system") != std::string::npos);
        CHECK(e.row() == 2);
    }
    {
        const auto e = parse_error("unit,region,violational\na,r1,maybe\n");
        CHECK(e.row() == 2);
        CHECK(e.field() == "violational");
        CHECK(std::string(e.what()).find("row 2") != std::string::npos);
    }
    {
        const auto e = parse_error("");
        CHECK(e.row() == 1);
        CHECK(std::string(e.what()).find("empty file") != std::string::npos);
    }
    {
        const auto e = parse_error("id,region,public\na,r,1\n");
        CHECK(e.row() == 1);
        CHECK(e.field() == "header");
    }
    {
        const auto e = parse_error("unit,region,violational\na,r,1\nb,r,0\na,s,1\n");
        CHECK(e.row() == 4);
        CHECK(e.field() == "unit");
    }
    {
        const auto e = parse_error("unit,region,violational\na,r\n");
        CHECK(e.row() == 2);
    }
    {
        const auto e = parse_error("unit,region,violational\na,,1\n");
        CHECK(e.field() == "region");
    }
    {
        const auto e = parse_error("unit,region,violational\na,r,1\n\nb,r,1\n");
        CHECK(e.row() == 3);
    }
}

TEST_CASE("write_manifest") {
    const UnitGraph g({{"d", "r2", false}, {"a", "r1", true}, {"c", "r2", true}, {"b", "r1", false}});
    CHECK(write_manifest(g) == "unit,region,violational\na,r1,1\nb,r1,0\nc,r2,1\nd,r2,0\n");
    CHECK(write_manifest(UnitGraph({{"x", "k", false}})) == "unit,region,violational\nx,k,0\n");
    CHECK(write_manifest(UnitGraph({{"a,\"b\"", "k", true}})) == "unit,region,violational\n\"a,\"\"b\"\"\",k,1\n");
}

TEST_CASE("manifest round trip is the identity") {
    std::mt19937_64 rng(2008);
    const std::string alphabet = "abcXYZ09._$,\" -";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int i = 0; i < 200; ++i) {
        const UnitGraph base = random_graph(rng, 40);
        std::vector<Unit> units = base.units();
        // Decorate ids and regions with characters that need quoting.
        for (Unit& u : units) {
            u.id += alphabet[pick(rng)];
            u.region = alphabet[pick(rng)] + u.region;
        }
        const UnitGraph g(std::move(units));
        const std::string text = write_manifest(g);
        const UnitGraph back = parse(text);
        CHECK(back == g);
        CHECK(write_manifest(back) == text);
    }
}

TEST_CASE("strip_java_comments_and_literals") {
    CHECK(strip_java_comments_and_literals("a /* b */ c") == "a         c");
    CHECK(strip_java_comments_and_literals("x // public class Y\nz") == "x                  \nz");
    CHECK(strip_java_comments_and_literals("s = \"}{\\\"\";") == "s =       ;");
    CHECK(strip_java_comments_and_literals("c = '\\'';") == "c =     ;");
    CHECK(strip_java_comments_and_literals("/*\n*/") == "  \n  ");
    CHECK_THROWS_AS(strip_java_comments_and_literals("/* open"), InvalidInput);
    CHECK_THROWS_AS(strip_java_comments_and_literals("s = \"open\n\";"), InvalidInput);
    CHECK_THROWS_AS(strip_java_comments_and_literals("t = \"\"\" open"), InvalidInput);
}

TEST_CASE("scan_java_source") {
    SUBCASE("package and visibility") {
        const auto s = scan_java_source(
            "package a.b;\nimport x.Y;\npublic class P {}\nclass Q {}\nprotected interface R {}\nprivate enum S {}\n");
        CHECK(s.package == "a.b");
        CHECK(s.types == std::vector<JavaTypeDecl>{{"P", true}, {"Q", false}, {"R", false}, {"S", false}});
    }
    SUBCASE("comment-only public class contributes nothing") {
        const auto s = scan_java_source("/* public class Ghost {} */\nclass Real {}\n");
        CHECK(s.package.empty());
        CHECK(s.types == std::vector<JavaTypeDecl>{{"Real", false}});
    }
    SUBCASE("nested, local and anonymous types are ignored") {
        const auto s = scan_java_source(
            "public class Outer { public static class In {} void f() { class L {} new Object() {}; } }");
        CHECK(s.types == std::vector<JavaTypeDecl>{{"Outer", true}});
    }
    SUBCASE("annotations, class literals and annotation types") {
        const auto s = scan_java_source(
            "@Ann(value = Foo.class, names = {\"public\"})\npublic final class A {}\npublic @interface Marker {}\n");
        CHECK(s.types == std::vector<JavaTypeDecl>{{"A", true}, {"Marker", true}});
    }
    SUBCASE("records are not counted") {
        const auto s = scan_java_source("public record Point(int x, int y) { }\nclass C {}\n");
        CHECK(s.types == std::vector<JavaTypeDecl>{{"C", false}});
    }
    SUBCASE("generic bounds") {
        const auto s = scan_java_source("public abstract class G<T extends Comparable<T>> implements Runnable {}");
        CHECK(s.types == std::vector<JavaTypeDecl>{{"G", true}});
    }
    SUBCASE("broken files") {
        CHECK_THROWS_AS(scan_java_source("public class A {"), InvalidInput);
        CHECK_THROWS_AS(scan_java_source("class A {}}"), InvalidInput);
        CHECK_THROWS_AS(scan_java_source("public class {}"), InvalidInput);
        CHECK_THROWS_AS(scan_java_source("package a;\npackage b;\n"), InvalidInput);
    }
}

TEST_CASE("scan_java_tree on the committed fixture") {
    const ScanResult scan = scan_java_tree(ENCAP_FIXTURE_DIR "/java");
    const UnitGraph& g = scan.graph;
    CHECK(g.size() == 7);
    CHECK(g.regions().size() == 3);
    Count public_units = 0;
    for (const Unit& u : g.units()) public_units += u.violational ? 1 : 0;
    CHECK(public_units == 4);

    std::vector<std::string> ids;
    for (const Unit& u : g.units()) ids.push_back(u.id + (u.violational ? "+" : "-"));
    CHECK(ids == std::vector<std::string>{"Base-", "Main+", "com.acme.core.Engine+", "com.acme.core.EngineHelper-",
                                          "com.acme.core.State+", "com.acme.util.Cache-", "com.acme.util.Strings+"});
    CHECK(g.regions()[0].region == "<default>");
    CHECK(scan.diagnostics.files_scanned == 5);
    CHECK(scan.diagnostics.units_found == 7);
    CHECK(scan.diagnostics.files_skipped.empty());
}

TEST_CASE("scan_java_tree edge cases") {
    SUBCASE("empty directory") {
        TempDir dir;
        CHECK_THROWS_WITH_AS(scan_java_tree(dir.path()), doctest::Contains("empty system"), ScanError);
    }
    SUBCASE("missing root") {
        CHECK_THROWS_AS(scan_java_tree("/nonexistent/encap/root"), ScanError);
    }
    SUBCASE("bad files are skipped, sorted by path, and the scan continues") {
        TempDir dir;
        dir.write("z/Broken.java", "package z;\npublic class Broken {\n");
        dir.write("a/Open.java", "package a;\n/* never closed\n");
        dir.write("a/Fine.java", "package a;\npublic class Fine {}\n");
        dir.write("a/notes.txt", "public class Ignored {}");
        const ScanResult scan = scan_java_tree(dir.path());
        CHECK(scan.graph.size() == 1);
        REQUIRE(scan.diagnostics.files_skipped.size() == 2);
        CHECK(scan.diagnostics.files_skipped[0].path == "a/Open.java");
        CHECK(scan.diagnostics.files_skipped[1].path == "z/Broken.java");
        CHECK(scan.diagnostics.files_scanned == 3);
    }
    SUBCASE("duplicate types keep the first file by path") {
        TempDir dir;
        dir.write("b/Dup.java", "package p;\nclass Dup {}\n");
        dir.write("a/Dup.java", "package p;\npublic class Dup {}\n");
        const ScanResult scan = scan_java_tree(dir.path());
        REQUIRE(scan.graph.size() == 1);
        CHECK(scan.graph.units()[0].violational);
        CHECK(scan.diagnostics.warnings.size() == 1);
    }
    SUBCASE("result does not depend on creation order") {
        TempDir first;
        TempDir second;
        const std::vector<std::pair<std::string, std::string>> files = {
            {"p/A.java", "package p; public class A {}"},
            {"p/B.java", "package p; class B {}"},
            {"q/C.java", "package q; public interface C {}"},
            {"D.java", "enum D { X }"},
        };
        for (const auto& [path, text] : files) first.write(path, text);
        for (auto it = files.rbegin(); it != files.rend(); ++it) second.write(it->first, it->second);
        const ScanResult a = scan_java_tree(first.path());
        const ScanResult b = scan_java_tree(second.path());
        CHECK(a.graph.units() == b.graph.units());
        CHECK(write_manifest(a.graph) == write_manifest(b.graph));
    }
}
