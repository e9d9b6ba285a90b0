#include "zsw/serialize.hpp"

#include <sstream>
#include <string>

#include "zsw/errors.hpp"

namespace zsw {

namespace {

Json witness_json(const GSequence& s) {
    Json out = Json::array();
    for (auto [index, count] : s.support())
        out.push_back(Json::array({index, count}));
    return out;
}

std::string strip(std::string line) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

} // namespace

Json to_json(const InvariantResult& r) {
    Json out;
    out["group"] = r.group.to_string();
    out["I"] = r.lengths.to_string();
    out["m"] = r.m;
    switch (r.status) {
    case ResultStatus::exact:
        out["value"] = r.value;
        break;
    case ResultStatus::cap_exceeded:
        out["value"] = nullptr;
        out["exceeded"] = r.cap;
        break;
    case ResultStatus::budget_exhausted:
        out["value"] = nullptr;
        out["budget_exhausted"] = true;
        out["lower_bound"] = r.value;
        break;
    }
    out["witness"] = witness_json(r.witness);
    out["nodes"] = r.nodes;
    return out;
}

Json to_json(const NaResult& r) {
    Json out;
    switch (r.status) {
    case ResultStatus::exact:
        out["value"] = r.value;
        break;
    case ResultStatus::cap_exceeded:
        out["value"] = nullptr;
        out["exceeded"] = r.cap;
        break;
    case ResultStatus::budget_exhausted:
        out["value"] = nullptr;
        out["budget_exhausted"] = true;
        out["lower_bound"] = r.value;
        break;
    }
    out["witness"] = r.witness;
    out["nodes"] = r.nodes;
    return out;
}

Json to_json(const BoundReport& r) {
    Json out;
    out["lower"] = r.lower;
    out["upper"] = r.upper;
    out["lower_source"] = r.lower_source;
    out["upper_source"] = r.upper_source;
    if (r.upper_real)
        out["upper_real"] = *r.upper_real;
    return out;
}

Json to_json(const KnownValue& v) {
    Json out;
    out["value"] = v.value ? Json(*v.value) : Json(nullptr);
    out["clause"] = v.clause;
    out["lower_bound_only"] = v.lower_bound_only;
    return out;
}

Json to_json(const Packing& p) {
    Json out = Json::array();
    for (const auto& part : p.parts)
        out.push_back(witness_json(part));
    return out;
}

Json to_json(const CentroidPartition& p) {
    Json sets = Json::array();
    for (std::size_t k = 0; k < p.sets.size(); ++k) {
        Json entry;
        entry["indices"] = p.sets[k];
        entry["centroid"] = Json::array({p.centroids[k].x, p.centroids[k].y});
        sets.push_back(entry);
    }
    Json out;
    out["sets"] = sets;
    return out;
}

Json to_json(const SmoothCertificate& c) {
    Json out;
    out["indices"] = c.indices;
    out["totals"] = c.totals;
    out["quotients"] = c.quotients;
    out["product"] = c.product.get_str();
    return out;
}

Json to_json(const EmSandwich& s) {
    Json out;
    out["lower"] = s.lower;
    out["upper"] = s.upper;
    out["equal"] = s.equal();
    return out;
}

Json bounds_report(const FiniteAbelianGroup& group) {
    Json out;
    out["group"] = group.to_string();
    out["order"] = group.order();
    out["exponent"] = group.exponent();
    out["rank"] = group.rank();
    out["d_star"] = d_star(group);
    if (!group.is_trivial())
        out["eq1"] = to_json(eq1_bounds(group));
    const auto known = known_davenport(group);
    out["known_davenport"] = to_json(known);
    if (!known.known())
        out["remark31_lower"] = to_json(remark31_lower(group));
    if (known.known()) {
        Json em;
        for (int m = 1; m <= 3; ++m)
            em[std::to_string(m)] = thm41_em(group, m);
        out["thm41_em"] = em;
    }
    const auto& f = group.factors();
    if (f.size() == 2 || f.size() == 1) {
        const std::int64_t n1 = f.size() == 2 ? f[0] : 1;
        const std::int64_t n2 = f.back();
        Json rank2;
        for (int m = 1; m <= 3; ++m) {
            Json row;
            row["E_m"] = cor45_em(n1, n2, m);
            row["D_m"] = cor45_dm(n1, n2, m);
            row["s_m"] = cor45_sm(n1, n2, m);
            rank2[std::to_string(m)] = row;
        }
        out["cor45"] = rank2;
    }
    if (const auto e = known_eta(group)) {
        out["known_eta"] = *e;
        Json dm;
        for (int m = 1; m <= 3; ++m)
            dm[std::to_string(m)] = *cor68_dm_upper(group, m);
        out["cor68_dm_upper"] = dm;
    }
    // C_p^n with n >= 2.
    if (f.size() >= 2 && is_prime(f.front()) && f.front() == f.back()) {
        const auto p = f.front();
        const auto n = static_cast<std::int64_t>(f.size());
        Json lemma;
        lemma["length"] = (n - 1) * p;
        lemma["upper"] = lemma61_bound(p, n);
        out["lemma61"] = lemma;
    }
    if (f.size() == 3 && is_prime(f[0])) {
        out["thm_616"] = to_json(thm_616_bounds(f[0], f[1], f[2]));
        out["thm_616"]["dm_multiplicity"] = thm_616_multiplicity(f[0], f[1], f[2]);
    }
    if (f.size() >= 2) {
        Json mainth;
        mainth["length"] = thm_mainth_length(f);
        mainth["upper"] = thm_mainth_bound(f);
        out["thm_mainth"] = mainth;
    }
    return out;
}

std::vector<LatticePoint> read_points(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::vector<LatticePoint> out;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = strip(line);
        if (body.empty())
            continue;
        std::istringstream fields(body);
        LatticePoint p;
        std::string extra;
        if (!(fields >> p.x >> p.y) || (fields >> extra))
            throw ParseError("expected two integers \"x y\"", line_no);
        out.push_back(p);
    }
    return out;
}

std::vector<BigInt> read_numbers(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::vector<BigInt> out;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = strip(line);
        if (body.empty())
            continue;
        if (body.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("expected a nonnegative integer", line_no);
        out.emplace_back(body, 10);
    }
    return out;
}

} // namespace zsw
