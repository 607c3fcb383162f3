#include <catch2/catch_amalgamated.hpp>

#include "seqspace/report.hpp"
#include "seqspace/samples.hpp"

using namespace seqspace;

TEST_CASE("partial norm CSV row follows the interface column order") {
    PartialNormReport r;
    r.family = "lorentz";
    r.p = 2.0;
    r.q = 0.5;
    r.depth = 1000;
    r.value = 1.25;
    r.direction = NormDirection::Partial;
    CHECK(std::string(kPartialNormCsvHeader) == "family,p,q,N,value,direction");
    CHECK(to_csv_row(r) == "lorentz,2,0.5,1000,1.25,partial");

    PartialNormReport lp;
    lp.family = "lp";
    lp.q = 1.0;
    lp.depth = 10;
    lp.value = 3.0;
    lp.direction = NormDirection::CertifiedUpper;
    CHECK(to_csv_row(lp) == "lp,,1,10,3,certified-upper"); // NaN column stays empty
}

TEST_CASE("witness entries serialize by name and parameters") {
    const auto w = witness_catalog(lp_space(1.0), AvoidanceSet::union_lq({0.5}));
    REQUIRE(w.has_value());
    const Json entry = witness_entry_json(*w);
    CHECK(entry.at("formula-id") == "powerlog");
    CHECK(entry.at("space").at("family") == "lp");
    CHECK(entry.at("avoid").at("kind") == "union-lq");
    CHECK(entry.at("params").at("a") == 1.0);
    CHECK(entry.at("params").at("b") == 2.0);
    CHECK(entry.at("certificate-params").contains("envelope"));
    CHECK(entry.at("certificate-params").at("divergence_profiles").size() == 1);
}

TEST_CASE("reports are byte-stable") {
    const auto w = witness_catalog(lp_space(2.0), AvoidanceSet::union_lq({1.0}));
    const EmbeddingReport emb = embedding_bound_check({3.0, 4.0}, *w, 200);
    const Json a = to_json(emb);
    const Json b = to_json(embedding_bound_check({3.0, 4.0}, *w, 200));
    CHECK(a.dump() == b.dump());
    CHECK(report_to_csv(a) == report_to_csv(b));
    CHECK(report_to_csv(a).rfind("field,value\n", 0) == 0);
}
