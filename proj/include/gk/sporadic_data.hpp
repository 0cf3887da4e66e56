#ifndef GK_SPORADIC_DATA_HPP
#define GK_SPORADIC_DATA_HPP

// Embedded reference data for the 26 sporadic simple groups: factored orders
// (with an independently transcribed decimal value, cross-checked by
// multiplication), outer automorphism group orders, prime graphs, the
// connected-component partitions for the groups with at least three
// components, and the labelled/unlabelled recognisability statuses.
//
// Graph adjacency comes from the element-order spectra in the ATLAS of Finite
// Groups (Conway et al., 1985) and the GAP character table library: {p,q} is
// an edge iff the group has an element of order pq.

#include <array>
#include <string>
#include <vector>

#include "gk/errors.hpp"
#include "gk/numtheory.hpp"

namespace gk {

enum class SporadicName {
    M11, M12, M22, M23, M24,
    J1, J2, J3, J4,
    Co1, Co2, Co3,
    Fi22, Fi23, Fi24p,
    HS, McL, He, Ru, Suz, ON, HN, Ly, Th, B, M,
};

inline const std::array<SporadicName, 26>& all_sporadic_names() {
    static const std::array<SporadicName, 26> names = {
        SporadicName::M11, SporadicName::M12, SporadicName::M22, SporadicName::M23,
        SporadicName::M24, SporadicName::J1, SporadicName::J2, SporadicName::J3,
        SporadicName::J4, SporadicName::Co1, SporadicName::Co2, SporadicName::Co3,
        SporadicName::Fi22, SporadicName::Fi23, SporadicName::Fi24p, SporadicName::HS,
        SporadicName::McL, SporadicName::He, SporadicName::Ru, SporadicName::Suz,
        SporadicName::ON, SporadicName::HN, SporadicName::Ly, SporadicName::Th,
        SporadicName::B, SporadicName::M,
    };
    return names;
}

inline std::string sporadic_to_string(SporadicName n) {
    switch (n) {
        case SporadicName::M11: return "M11";
        case SporadicName::M12: return "M12";
        case SporadicName::M22: return "M22";
        case SporadicName::M23: return "M23";
        case SporadicName::M24: return "M24";
        case SporadicName::J1: return "J1";
        case SporadicName::J2: return "J2";
        case SporadicName::J3: return "J3";
        case SporadicName::J4: return "J4";
        case SporadicName::Co1: return "Co1";
        case SporadicName::Co2: return "Co2";
        case SporadicName::Co3: return "Co3";
        case SporadicName::Fi22: return "Fi22";
        case SporadicName::Fi23: return "Fi23";
        case SporadicName::Fi24p: return "Fi24'";
        case SporadicName::HS: return "HS";
        case SporadicName::McL: return "McL";
        case SporadicName::He: return "He";
        case SporadicName::Ru: return "Ru";
        case SporadicName::Suz: return "Suz";
        case SporadicName::ON: return "O'N";
        case SporadicName::HN: return "HN";
        case SporadicName::Ly: return "Ly";
        case SporadicName::Th: return "Th";
        case SporadicName::B: return "B";
        case SporadicName::M: return "M";
    }
    throw DomainError("sporadic_to_string: bad enum value");
}

inline SporadicName sporadic_from_string(const std::string& s) {
    for (SporadicName n : all_sporadic_names())
        if (sporadic_to_string(n) == s) return n;
    // Common ASCII aliases.
    if (s == "ON") return SporadicName::ON;
    if (s == "Fi24" || s == "Fi24prime") return SporadicName::Fi24p;
    throw ParseError("unknown sporadic group name: '" + s + "'");
}

enum class LabelledStatus { Recognisable, KRecognisable, Unrecognisable };

struct SporadicRecord {
    SporadicName name;
    // Order as prime powers plus the decimal literal it must multiply to.
    std::vector<std::pair<u64, unsigned>> order;
    std::string order_decimal;
    unsigned out_order; // |Out(G)| (1 or 2 for all sporadic groups)
    std::vector<std::pair<u64, u64>> edges;
    // Connected components when s(G) >= 3 (empty otherwise); an independent
    // transcription cross-checked against the graph by the catalog validator.
    std::vector<std::vector<u64>> table_components;
    LabelledStatus labelled;
    unsigned k_recognisable = 0; // for KRecognisable: number of groups sharing the labelled graph
    bool unlabelled_recognisable;
    std::string citation;
};

inline const std::vector<SporadicRecord>& sporadic_records() {
    using LS = LabelledStatus;
    static const std::vector<SporadicRecord> records = {
        {SporadicName::M11, {{2,4},{3,2},{5,1},{11,1}}, "7920", 1,
         {{2,3}},
         {{2,3},{5},{11}},
         LS::KRecognisable, 2, false, "ATLAS p.18; Hagie 2003"},
        {SporadicName::M12, {{2,6},{3,3},{5,1},{11,1}}, "95040", 2,
         {{2,3},{2,5}},
         {},
         LS::Unrecognisable, 0, false, "ATLAS p.33; Kondrat'ev 2014"},
        {SporadicName::M22, {{2,7},{3,2},{5,1},{7,1},{11,1}}, "443520", 2,
         {{2,3}},
         {{2,3},{5},{7},{11}},
         LS::Recognisable, 0, false, "ATLAS p.39; Hagie 2003"},
        {SporadicName::M23, {{2,7},{3,2},{5,1},{7,1},{11,1},{23,1}}, "10200960", 1,
         {{2,3},{3,5},{2,7}},
         {{2,3,5,7},{11},{23}},
         LS::Recognisable, 0, false, "ATLAS p.71; Hagie 2003"},
        {SporadicName::M24, {{2,10},{3,3},{5,1},{7,1},{11,1},{23,1}}, "244823040", 1,
         {{2,3},{2,5},{2,7},{3,5},{3,7}},
         {{2,3,5,7},{11},{23}},
         LS::Recognisable, 0, false, "ATLAS p.96; Hagie 2003"},
        {SporadicName::J1, {{2,3},{3,1},{5,1},{7,1},{11,1},{19,1}}, "175560", 1,
         {{2,3},{2,5},{3,5}},
         {{2,3,5},{7},{11},{19}},
         LS::Recognisable, 0, false, "ATLAS p.36; Hagie 2003"},
        {SporadicName::J2, {{2,7},{3,3},{5,2},{7,1}}, "604800", 2,
         {{2,3},{2,5},{3,5}},
         {},
         LS::Unrecognisable, 0, false, "ATLAS p.42; Kondrat'ev 2014"},
        {SporadicName::J3, {{2,7},{3,5},{5,1},{17,1},{19,1}}, "50232960", 2,
         {{2,3},{2,5},{3,5}},
         {{2,3,5},{17},{19}},
         LS::Recognisable, 0, false, "ATLAS p.82; Hagie 2003"},
        {SporadicName::J4,
         {{2,21},{3,3},{5,1},{7,1},{11,3},{23,1},{29,1},{31,1},{37,1},{43,1}},
         "86775571046077562880", 1,
         {{2,3},{2,5},{2,7},{2,11},{3,5},{3,7},{3,11},{5,7}},
         {{2,3,5,7,11},{23},{29},{31},{37},{43}},
         LS::Recognisable, 0, true, "ATLAS p.190; Zavarnitsine 2006"},
        {SporadicName::Co1,
         {{2,21},{3,9},{5,4},{7,2},{11,1},{13,1},{23,1}}, "4157776806543360000", 1,
         {{2,3},{2,5},{2,7},{2,11},{2,13},{3,5},{3,7},{3,11},{3,13},{5,7}},
         {},
         LS::Recognisable, 0, false, "ATLAS p.183; Kondrat'ev 2014"},
        {SporadicName::Co2,
         {{2,18},{3,6},{5,3},{7,1},{11,1},{23,1}}, "42305421312000", 1,
         {{2,3},{2,5},{2,7},{3,5}},
         {{2,3,5,7},{11},{23}},
         LS::Recognisable, 0, false, "ATLAS p.154; Hagie 2003"},
        {SporadicName::Co3,
         {{2,10},{3,7},{5,3},{7,1},{11,1},{23,1}}, "495766656000", 1,
         {{2,3},{2,5},{2,7},{2,11},{3,5},{3,7}},
         {},
         LS::Unrecognisable, 0, false, "ATLAS p.134; Kondrat'ev 2014"},
        {SporadicName::Fi22,
         {{2,17},{3,9},{5,2},{7,1},{11,1},{13,1}}, "64561751654400", 2,
         {{2,3},{2,5},{2,7},{2,11},{3,5},{3,7}},
         {},
         LS::KRecognisable, 3, false, "ATLAS p.156; Kondrat'ev 2014"},
        {SporadicName::Fi23,
         {{2,18},{3,13},{5,2},{7,1},{11,1},{13,1},{17,1},{23,1}},
         "4089470473293004800", 1,
         {{2,3},{2,5},{2,7},{2,11},{2,13},{3,5},{3,7},{3,13},{5,7}},
         {{2,3,5,7,11,13},{17},{23}},
         LS::Recognisable, 0, true, "ATLAS p.177; Kondrat'ev 2014"},
        {SporadicName::Fi24p,
         {{2,21},{3,16},{5,2},{7,3},{11,1},{13,1},{17,1},{23,1},{29,1}},
         "1255205709190661721292800", 2,
         {{2,3},{2,5},{2,7},{2,11},{2,13},{3,5},{3,7},{3,11},{3,13},{5,7}},
         {{2,3,5,7,11,13},{17},{23},{29}},
         LS::Recognisable, 0, true, "ATLAS p.200; Kondrat'ev 2014"},
        {SporadicName::HS, {{2,9},{3,2},{5,3},{7,1},{11,1}}, "44352000", 2,
         {{2,3},{2,5},{3,5}},
         {{2,3,5},{7},{11}},
         LS::KRecognisable, 2, false, "ATLAS p.80; Hagie 2003"},
        {SporadicName::McL, {{2,7},{3,6},{5,3},{7,1},{11,1}}, "898128000", 2,
         {{2,3},{2,5},{2,7},{3,5}},
         {},
         LS::Unrecognisable, 0, false, "ATLAS p.100; Kondrat'ev 2014"},
        {SporadicName::He, {{2,10},{3,3},{5,2},{7,3},{17,1}}, "4030387200", 2,
         {{2,3},{2,5},{2,7},{3,5},{3,7}},
         {},
         LS::Unrecognisable, 0, false, "ATLAS p.104; Kondrat'ev 2014"},
        {SporadicName::Ru, {{2,14},{3,3},{5,3},{7,1},{13,1},{29,1}}, "145926144000", 1,
         {{2,3},{2,5},{2,7},{2,13},{3,5}},
         {},
         LS::Unrecognisable, 0, false, "ATLAS p.126; Kondrat'ev 2014 (corrected)"},
        {SporadicName::Suz, {{2,13},{3,7},{5,2},{7,1},{11,1},{13,1}}, "448345497600", 2,
         {{2,3},{2,5},{2,7},{3,5},{3,7}},
         {{2,3,5,7},{11},{13}},
         LS::Recognisable, 0, false, "ATLAS p.128; Kondrat'ev 2014"},
        {SporadicName::ON, {{2,9},{3,4},{5,1},{7,3},{11,1},{19,1},{31,1}},
         "460815505920", 2,
         {{2,3},{2,5},{2,7},{3,5}},
         {{2,3,5,7},{11},{19},{31}},
         LS::Recognisable, 0, true, "ATLAS p.132; Kondrat'ev 2014"},
        {SporadicName::HN, {{2,14},{3,6},{5,6},{7,1},{11,1},{19,1}}, "273030912000000", 2,
         {{2,3},{2,5},{2,7},{2,11},{3,5},{3,7},{5,7}},
         {},
         LS::KRecognisable, 2, false, "ATLAS p.164; Kondrat'ev 2014"},
        {SporadicName::Ly, {{2,8},{3,7},{5,6},{7,1},{11,1},{31,1},{37,1},{67,1}},
         "51765179004000000", 1,
         {{2,3},{2,5},{2,7},{2,11},{3,5},{3,7},{3,11}},
         {{2,3,5,7,11},{31},{37},{67}},
         LS::Recognisable, 0, true, "ATLAS p.174; Kondrat'ev 2014"},
        {SporadicName::Th, {{2,15},{3,10},{5,3},{7,2},{13,1},{19,1},{31,1}},
         "90745943887872000", 1,
         {{2,3},{2,5},{2,7},{3,5},{3,7},{3,13}},
         {{2,3,5,7,13},{19},{31}},
         LS::Recognisable, 0, true, "ATLAS p.177; Kondrat'ev 2014"},
        {SporadicName::B,
         {{2,41},{3,13},{5,6},{7,2},{11,1},{13,1},{17,1},{19,1},{23,1},{31,1},{47,1}},
         "4154781481226426191177580544000000", 1,
         {{2,3},{2,5},{2,7},{2,11},{2,13},{2,17},{2,19},{2,23},
          {3,5},{3,7},{3,11},{3,13},{5,7},{5,11}},
         {{2,3,5,7,11,13,17,19,23},{31},{47}},
         LS::Recognisable, 0, true, "ATLAS p.217; Kondrat'ev 2014"},
        {SporadicName::M,
         {{2,46},{3,20},{5,9},{7,6},{11,2},{13,3},{17,1},{19,1},{23,1},{29,1},
          {31,1},{41,1},{47,1},{59,1},{71,1}},
         "808017424794512875886459904961710757005754368000000000", 1,
         {{2,3},{2,5},{2,7},{2,11},{2,13},{2,17},{2,19},{2,23},{2,31},{2,47},
          {3,5},{3,7},{3,11},{3,13},{3,17},{3,19},{3,23},{3,29},{3,31},
          {5,7},{5,11},{5,19},{7,17}},
         {{2,3,5,7,11,13,17,19,23,29,31,47},{41},{59},{71}},
         LS::Recognisable, 0, true, "ATLAS p.234; Zavarnitsine 2006, Fig. 5"},
    };
    return records;
}

inline const SporadicRecord& sporadic_record(SporadicName n) {
    for (const auto& r : sporadic_records())
        if (r.name == n) return r;
    throw NotFound("sporadic_record: missing entry");
}

} // namespace gk

#endif // GK_SPORADIC_DATA_HPP
