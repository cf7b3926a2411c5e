#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "fibcat/catalog.hpp"
#include "fibcat/io.hpp"
#include "helpers.hpp"

using namespace fibcat;
namespace fs = std::filesystem;

TEST_CASE("sha256 known vectors") {
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex(std::string(1000000, 'a')) ==
        "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST_CASE("canonical serialization is stable") {
  Json j;
  j["b"] = 1;
  j["a"] = 2;  // insertion order wins over lexicographic order
  CHECK(canonical_bytes(j) == "{\n  \"b\": 1,\n  \"a\": 2\n}\n");
  CHECK(canonical_bytes(j) == canonical_bytes(j));
}

TEST_CASE("parse failures use the library error type") {
  CHECK_THROWS_AS(parse_json("{not json", "probe"), CatError);
  try {
    parse_json("{not json", "probe");
  } catch (const CatError& e) {
    CHECK(e.code() == Err::Parse);
  }
}

TEST_CASE("category JSON round trip") {
  CatPtr three = helpers::cat("three");
  RawCategory raw = three->to_raw();
  Json j = category_to_json(raw);
  RawCategory back = category_from_json(j, "unused");
  CatPtr again = make_cat(back);
  CHECK(three->same_structure(*again));
  CHECK(again->name() == "three");
}

TEST_CASE("functor JSON round trip") {
  Json j = parse_json(read_file(std::string(helpers::catalog_dir()) +
                                "/fold.json"),
                      "fold");
  CHECK(json_is_functor(j));
  RawFunctor raw = functor_from_json(j, "unused");
  CHECK(raw.name == "fold");
  CHECK(raw.source_file == "two_plus_two.json");
  Json j2 = functor_to_json(raw);
  CHECK(canonical_bytes(j) == canonical_bytes(j2));
  Json cj = parse_json(read_file(std::string(helpers::catalog_dir()) +
                                 "/three.json"),
                       "three");
  CHECK_FALSE(json_is_functor(cj));
}

TEST_CASE("declared ids may not use reserved forms") {
  auto load = [](const char* body) {
    Json j = parse_json(body, "probe");
    return make_cat(category_from_json(j, "probe"));
  };
  CHECK_THROWS_AS(load(R"({"objects":["id:x"],"arrows":[]})"), CatError);
  CHECK_THROWS_AS(load(R"({"objects":["a|b"],"arrows":[]})"), CatError);
  CHECK_THROWS_AS(
      load(R"({"objects":["x"],
               "arrows":[{"id":"g.o.f","src":"x","dst":"x"}],
               "compose":[["g.o.f","g.o.f","g.o.f"]]})"),
      CatError);
  CHECK_THROWS_AS(load(R"({"objects":[""],"arrows":[]})"), CatError);
  // Constructed categories are allowed to use those forms internally: the
  // guard applies to declared input only.
  CHECK(helpers::cat("two")->arrow_index("id:0") >= 0);
}

TEST_CASE("workspace resolution and caching") {
  Workspace w{helpers::catalog_dir()};
  CHECK(w.resolve("two") ==
        std::string(helpers::catalog_dir()) + "/two.json");
  // A literal path wins when it exists.
  std::string literal = std::string(helpers::catalog_dir()) + "/two.json";
  CHECK(w.resolve(literal) == literal);
  CHECK_THROWS_AS(w.resolve("no_such_entry"), CatError);
  try {
    w.resolve("no_such_entry");
  } catch (const CatError& e) {
    CHECK(e.code() == Err::UnknownEntry);
  }

  CatPtr a = w.category("two");
  CatPtr b = w.category("two");
  CHECK(a.get() == b.get());  // cached: shared carrier

  FinFunctor f = w.functor("fold");
  CHECK(f.name() == "fold");
  CHECK(f.source()->name() == "two_plus_two");
  CHECK(f.target()->name() == "two");
  // The functor's endpoints share carriers with directly loaded categories.
  CHECK(f.target().get() == w.category("two").get());

  // Every read is recorded with its digest.
  bool saw_fold = false;
  for (const auto& [path, digest] : w.inputs()) {
    CHECK(digest == sha256_hex(read_file(path)));
    if (path.find("fold.json") != std::string::npos) saw_fold = true;
  }
  CHECK(saw_fold);
}

TEST_CASE("workspace classifies files by shape") {
  Workspace w{helpers::catalog_dir()};
  CHECK(w.is_functor_file("fold"));
  CHECK_FALSE(w.is_functor_file("three"));
}

TEST_CASE("bundled examples regenerate byte-for-byte") {
  fs::path tmp = fs::temp_directory_path() / "fibcat_catalog_regen";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  std::vector<std::string> written = generate_catalog(tmp.string());
  CHECK(written.size() == 41);
  int compared = 0;
  for (const auto& path : written) {
    fs::path generated(path);
    fs::path committed =
        fs::path(helpers::catalog_dir()) / generated.filename();
    CAPTURE(generated.filename().string());
    REQUIRE(fs::exists(committed));
    CHECK(read_file(generated.string()) == read_file(committed.string()));
    ++compared;
  }
  CHECK(compared == 41);
  // Determinism: a second run writes identical bytes.
  std::vector<std::string> again = generate_catalog(tmp.string());
  CHECK(again == written);
  for (const auto& path : again) {
    fs::path committed =
        fs::path(helpers::catalog_dir()) / fs::path(path).filename();
    CHECK(read_file(path) == read_file(committed.string()));
  }
  fs::remove_all(tmp);
}

TEST_CASE("dot rendering") {
  std::string d = dot_category(*helpers::cat("two"));
  CHECK(d.find("digraph") != std::string::npos);
  CHECK(d.find("\"0\"") != std::string::npos);
  CHECK(d.find("f01") != std::string::npos);
  CHECK(d.find("id:0") == std::string::npos);  // identities are implicit

  std::string df = dot_functor(helpers::fun("fold"));
  CHECK(df.find("cluster_source") != std::string::npos);
  CHECK(df.find("cluster_target") != std::string::npos);
  CHECK(df.find("dashed") != std::string::npos);
}

TEST_CASE("report skeleton") {
  Workspace w{helpers::catalog_dir()};
  (void)w.category("two");
  Json params;
  params["args"] = Json::array({"two"});
  Json r = make_report("probe", params, w.inputs());
  CHECK(r["schema"] == kReportSchema);
  CHECK(r["verb"] == "probe");
  CHECK(r["params"]["args"][0] == "two");
  REQUIRE(r["inputs"].size() == 1);
  CHECK(r["inputs"][0].contains("path"));
  CHECK(r["inputs"][0].contains("sha256"));
}
