#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "gk/recogniser.hpp"

using namespace gk;

namespace {

std::set<std::string> candidate_keys(SporadicName target) {
    std::set<std::string> out;
    for (const Candidate& c : candidate_socles(builtin_catalog(), target))
        out.insert(c.key());
    return out;
}

const EliminationReport& report_for(const RecognitionResult& r,
                                    const std::string& key) {
    for (const EliminationReport& rep : r.reports)
        if (rep.candidate.key() == key) return rep;
    FAIL("no report for candidate " + key);
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("the verdict map over all 26 groups is the expected partition") {
    const std::set<SporadicName> eight = {
        SporadicName::B,  SporadicName::Fi23, SporadicName::Fi24p,
        SporadicName::J4, SporadicName::Ly,   SporadicName::M,
        SporadicName::ON, SporadicName::Th};
    for (SporadicName n : all_sporadic_names()) {
        RecognitionResult r = recognise(builtin_catalog(), n);
        INFO(sporadic_to_string(n));
        REQUIRE(r.recognisable == (eight.count(n) == 1));
        if (r.recognisable) {
            for (const EliminationReport& rep : r.reports) {
                INFO(rep.candidate.display());
                REQUIRE(rep.eliminated);
                REQUIRE(!rep.rule.empty());
                REQUIRE(rep.rule >= "R1");
                REQUIRE(rep.rule <= "R6");
                REQUIRE(!rep.trace.empty());
                REQUIRE(!rep.citation.empty());
            }
        } else {
            REQUIRE(r.reports.empty());
        }
    }
}

TEST_CASE("candidate lists equal the published tables") {
    using S = std::set<std::string>;
    REQUIRE(candidate_keys(SporadicName::M) ==
            S{"2e6_2", "psl3_4", "sporadic:Fi24'", "sporadic:J1", "sporadic:J4",
              "sporadic:Ly", "sporadic:M22", "sporadic:O'N", "sz-family"});
    REQUIRE(candidate_keys(SporadicName::Fi24p) ==
            S{"2e6_2", "psl3_4", "sporadic:J1", "sporadic:Ly", "sporadic:M22",
              "sporadic:O'N", "sz-family"});
    REQUIRE(candidate_keys(SporadicName::Ly) ==
            S{"2e6_2", "psl3_4", "sporadic:J1", "sporadic:M22", "sporadic:O'N",
              "sz-family"});
    REQUIRE(candidate_keys(SporadicName::ON) ==
            S{"psl3_4", "sporadic:J1", "sporadic:M22", "sz-family"});
    REQUIRE(candidate_keys(SporadicName::B) ==
            S{"2e6_2", "2f4-family", "2g2-family", "alt-family", "f4-family",
              "g2-family", "pomega_minus-family", "psl2-family", "sporadic:Fi23",
              "sporadic:Fi24'", "sporadic:J4", "sporadic:Ly", "sporadic:O'N",
              "sporadic:Th", "sz-family"});
    REQUIRE(candidate_keys(SporadicName::Th) ==
            S{"2g2-family", "alt-family", "f4-family", "g2-family",
              "pomega_minus-family", "psl2-family", "psl3_4", "psu6_2",
              "sporadic:Co2", "sporadic:HS", "sporadic:J1", "sporadic:J3",
              "sporadic:M11", "sporadic:M22", "sporadic:M23", "sporadic:M24",
              "sporadic:O'N", "sporadic:Suz", "sz-family"});
    REQUIRE(candidate_keys(SporadicName::Fi23) ==
            S{"2e6_2", "2f4-family", "2g2-family", "alt-family", "f4-family",
              "g2-family", "pomega_minus-family", "psl2-family", "psl3_4",
              "psu6_2", "sporadic:Co2", "sporadic:HS", "sporadic:J1",
              "sporadic:J3", "sporadic:Ly", "sporadic:M11", "sporadic:M22",
              "sporadic:M23", "sporadic:M24", "sporadic:O'N", "sporadic:Suz",
              "sporadic:Th", "sz-family"});
    // J4 needs no candidate analysis: the six-component uniqueness rule.
    REQUIRE(candidate_socles(builtin_catalog(), SporadicName::J4).empty());
}

TEST_CASE("candidate_socles rejects non-recognisable targets") {
    REQUIRE_THROWS_AS(candidate_socles(builtin_catalog(), SporadicName::Ru),
                      UnsupportedTarget);
    REQUIRE_THROWS_AS(candidate_socles(builtin_catalog(), SporadicName::M12),
                      UnsupportedTarget);
}

TEST_CASE("alternating slice parameters depend on the target") {
    auto params = [](SporadicName t) -> std::vector<u64> {
        for (const Candidate& c : candidate_socles(builtin_catalog(), t))
            if (c.is_slice && c.family == Family::Alt) return c.params;
        return {};
    };
    REQUIRE(params(SporadicName::Th) == std::vector<u64>{7, 13});
    REQUIRE(params(SporadicName::Fi23) == std::vector<u64>{7, 13, 19});
    REQUIRE(params(SporadicName::B) == std::vector<u64>{19, 31});
}

TEST_CASE("J4 short-circuits via the six-component uniqueness rule") {
    RecognitionResult r = recognise(builtin_catalog(), SporadicName::J4);
    REQUIRE(r.recognisable);
    REQUIRE(r.reports.empty());
    REQUIRE(r.summary.find("six") != std::string::npos);
    REQUIRE(r.citation.find("Zavarnitsine") != std::string::npos);
}

TEST_CASE("mandated elimination traces: Monster") {
    RecognitionResult r = recognise(builtin_catalog(), SporadicName::M);
    const EliminationReport& j4 = report_for(r, "sporadic:J4");
    REQUIRE(j4.rule == "R2");
    REQUIRE(j4.trace.find("do not form a coclique") != std::string::npos);
    for (const EliminationReport& rep : r.reports) REQUIRE(rep.rule == "R2");
}

TEST_CASE("mandated elimination traces: Fi24'") {
    RecognitionResult r = recognise(builtin_catalog(), SporadicName::Fi24p);
    const EliminationReport& e6 = report_for(r, "2e6_2");
    REQUIRE(e6.rule == "R5");
    REQUIRE(e6.trace.find("13, 17, 19") != std::string::npos);
}

TEST_CASE("mandated elimination traces: Ly uses the edge count on 2E6(2)") {
    RecognitionResult r = recognise(builtin_catalog(), SporadicName::Ly);
    const EliminationReport& e6 = report_for(r, "2e6_2");
    REQUIRE(e6.rule == "R1");
    REQUIRE(e6.trace.find("more edges") != std::string::npos);
}

TEST_CASE("mandated elimination traces: O'N Suzuki endgame") {
    RecognitionResult r = recognise(builtin_catalog(), SporadicName::ON);
    const EliminationReport& sz = report_for(r, "sz-family");
    REQUIRE(sz.rule == "R5");
    REQUIRE(sz.trace.find("3 <= N <= 6") != std::string::npos);
    REQUIRE(sz.trace.find("at most two isolated vertices, 7 and 13, a "
                          "contradiction") != std::string::npos);
}

TEST_CASE("mandated elimination traces: Th") {
    RecognitionResult r = recognise(builtin_catalog(), SporadicName::Th);
    const EliminationReport& rg = report_for(r, "2g2-family");
    REQUIRE(rg.rule == "R5");
    REQUIRE(rg.trace.find("order 19") != std::string::npos);
    REQUIRE(rg.trace.find("does not have two isolated vertices") !=
            std::string::npos);
    // Equal vertex count: the O'N candidate needs the completion enumeration.
    const EliminationReport& on = report_for(r, "sporadic:O'N");
    REQUIRE(on.rule == "R5");
    REQUIRE(on.trace.find("outer automorphism") != std::string::npos);
    REQUIRE(on.trace.find("edge sets") != std::string::npos);
    // The K4 {2,3,5,13} contradiction for POmega10-(3).
    const EliminationReport& po = report_for(r, "pomega_minus-family");
    REQUIRE(po.rule == "R4");
    REQUIRE(po.trace.find("{2, 3, 5, 13}") != std::string::npos);
}

TEST_CASE("mandated elimination traces: Fi23") {
    RecognitionResult r = recognise(builtin_catalog(), SporadicName::Fi23);
    const EliminationReport& sz = report_for(r, "sz-family");
    REQUIRE(sz.rule == "R5");
    REQUIRE(sz.trace.find("3 <= N <= 7") != std::string::npos);
    REQUIRE(sz.trace.find("unique clique of size 4") != std::string::npos);
    const EliminationReport& ly = report_for(r, "sporadic:Ly");
    REQUIRE(ly.rule == "R5");
    REQUIRE(ly.trace.find("Out(Ly) is trivial") != std::string::npos);
    const EliminationReport& e6 = report_for(r, "2e6_2");
    REQUIRE(e6.rule == "R5");
    const EliminationReport& on = report_for(r, "sporadic:O'N");
    REQUIRE(on.rule == "R5");
    REQUIRE(on.trace.find("is connected") != std::string::npos);
}

TEST_CASE("mandated elimination traces: Baby Monster") {
    RecognitionResult r = recognise(builtin_catalog(), SporadicName::B);
    const EliminationReport& alt = report_for(r, "alt-family");
    REQUIRE(alt.rule == "R4");
    REQUIRE(alt.trace.find("{2, 3, 5, 7, 11}") != std::string::npos);
    REQUIRE(alt.trace.find("size 5") != std::string::npos);
    REQUIRE(alt.trace.find("no such clique") != std::string::npos);
    const EliminationReport& j4 = report_for(r, "sporadic:J4");
    REQUIRE(j4.rule == "R5");
    REQUIRE(j4.trace.find("is connected") != std::string::npos);
}

TEST_CASE("unrecognisable targets return verified witnesses or citations") {
    RecognitionResult ru = recognise(builtin_catalog(), SporadicName::Ru);
    REQUIRE(!ru.recognisable);
    REQUIRE(ru.witness.has_value());
    REQUIRE(ru.verification.has_value());
    REQUIRE(ru.verification->labelled_equal);

    // Citation-only groups (s <= 2): unrecognisability is quoted, not replayed.
    RecognitionResult m12 = recognise(builtin_catalog(), SporadicName::M12);
    REQUIRE(!m12.recognisable);
    REQUIRE(!m12.witness.has_value());
    REQUIRE(!m12.citation.empty());
}

TEST_CASE("R6 cross-check: both search orders agree on every in-bounds pair") {
    const Catalog& cat = builtin_catalog();
    unsigned checked = 0;
    for (SporadicName t : recognisable_targets()) {
        if (t == SporadicName::J4) continue;
        detail::TargetData g = detail::target_data(cat, t);
        for (const Candidate& c : candidate_socles(cat, t)) {
            if (c.is_slice) continue;
            PrimeGraph s = detail::candidate_graph(cat, c.id);
            unsigned k = g.inv.vertex_count - s.vertex_count();
            if (k > 4 || g.inv.vertex_count > 15) continue;
            INFO(sporadic_to_string(t) + " vs " + c.display());
            auto fwd = completion_search(cat, t, c.id, SearchOrder::Forward);
            auto rev = completion_search(cat, t, c.id, SearchOrder::Reverse);
            REQUIRE(fwd.has_value() == rev.has_value());
            // No completion exists for any candidate: Theorem 1 holds.
            REQUIRE(!fwd.has_value());
            ++checked;
        }
    }
    REQUIRE(checked >= 40);
}

TEST_CASE("completion_search enforces its bounds") {
    REQUIRE_THROWS_AS(completion_search(builtin_catalog(), SporadicName::M,
                                        GroupId::psl3_4(), SearchOrder::Forward),
                      DomainError);
}

TEST_CASE("recognise is deterministic and reports are sorted by candidate key") {
    for (SporadicName t : recognisable_targets()) {
        RecognitionResult a = recognise(builtin_catalog(), t);
        RecognitionResult b = recognise(builtin_catalog(), t);
        REQUIRE(recognition_to_text(a) == recognition_to_text(b));
        REQUIRE(recognition_to_json(a).dump() == recognition_to_json(b).dump());
        for (size_t i = 0; i + 1 < a.reports.size(); ++i)
            REQUIRE(a.reports[i].candidate.key() < a.reports[i + 1].candidate.key());
    }
}

TEST_CASE("json serialization carries the full report structure") {
    RecognitionResult r = recognise(builtin_catalog(), SporadicName::ON);
    json j = recognition_to_json(r);
    REQUIRE(j["target"] == "O'N");
    REQUIRE(j["recognisable"] == true);
    REQUIRE(j["reports"].size() == r.reports.size());
    for (const auto& jr : j["reports"]) {
        REQUIRE(jr.contains("rule"));
        REQUIRE(jr.contains("trace"));
        REQUIRE(jr.contains("citation"));
        REQUIRE(jr["eliminated"] == true);
    }
    json w = recognition_to_json(recognise(builtin_catalog(), SporadicName::Co2));
    REQUIRE(w["recognisable"] == false);
    REQUIRE(w.contains("witness"));
    REQUIRE(w["witness"]["verified"] == true);
}

TEST_CASE("facts are mandatory: stripping them raises MissingFact") {
    Catalog cat = builtin_catalog();
    std::erase_if(cat.facts, [](const FactRecord& f) {
        return f.subject == GroupId::sporadic_group(SporadicName::ON) &&
               f.kind == FactKind::CentralizerEdge;
    });
    // Th vs O'N needs the outer-automorphism centraliser data.
    REQUIRE_THROWS_AS(
        apply_filters(cat, SporadicName::Th,
                      Candidate::concrete(GroupId::sporadic_group(SporadicName::ON))),
        MissingFact);
}

TEST_CASE("candidate display names") {
    REQUIRE(Candidate::concrete(GroupId::psl3_4()).display() == "PSL3(4)");
    REQUIRE(Candidate::concrete(GroupId::two_e6_2()).display() == "2E6(2)");
    REQUIRE(Candidate::concrete(GroupId::two_b2(9)).display() == "Sz(2^19)");
    REQUIRE(Candidate::concrete(GroupId::two_g2(1)).display() == "2G2(27)");
    REQUIRE(Candidate::concrete(GroupId::pomega_minus(5)).display() ==
            "POmega10-(3)");
    REQUIRE(Candidate::family_slice(Family::TwoB2, "").key() == "sz-family");
}
