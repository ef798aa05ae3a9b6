#include "equable/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace equable {

namespace {

using nlohmann::json;

json vertex_to_json(Eisenstein z) { return json::array({z.a, z.b}); }

Eisenstein vertex_from_json(const json& j) {
    return {j.at(0).get<int64_t>(), j.at(1).get<int64_t>()};
}

json triangle_to_json(const LatticeTriangle& t) {
    return json{{"A", vertex_to_json(t.A)},
                {"B", vertex_to_json(t.B)},
                {"C", vertex_to_json(t.C)}};
}

LatticeTriangle triangle_from_json(const json& j) {
    return {vertex_from_json(j.at("A")), vertex_from_json(j.at("B")),
            vertex_from_json(j.at("C"))};
}

template <typename Triple>
json triple_to_json(const Triple& t) {
    const auto& [p, q, r] = t;
    return json::array({p, q, r});
}

json key_to_json(const CongruenceKey& k) {
    return json::array({k.norms[0], k.norms[1], k.norms[2]});
}

std::array<int64_t, 3> array3_from_json(const json& j) {
    return {j.at(0).get<int64_t>(), j.at(1).get<int64_t>(), j.at(2).get<int64_t>()};
}

void require_kind(const json& j, const char* kind) {
    if (j.at("kind").get<std::string>() != kind)
        throw std::invalid_argument(std::string("report kind mismatch: expected ") + kind);
}

std::string triple_string(int64_t p, int64_t q, int64_t r) {
    std::ostringstream out;
    out << "(" << p << "," << q << "," << r << ")";
    return out.str();
}

std::string sides_string(const std::array<int64_t, 3>& n) {
    return sqrt3_multiple_string(n[0]) + ", " + sqrt3_multiple_string(n[1]) + ", " +
           sqrt3_multiple_string(n[2]);
}

}  // namespace

ClassificationReport run_classification(SearchWindow w) {
    ClassificationReport r;
    r.xyz_solutions = enumerate_xyz();
    std::set<CongruenceKey> diophantine_keys;
    for (const XyzSolution& s : r.xyz_solutions) {
        const std::array<Sqrt3Length, 3> sides = xyz_to_sides(s);
        r.side_triples.push_back({sides[0].n, sides[1].n, sides[2].n});
        diophantine_keys.insert(congruence_key_of_sides(sides));
        const std::vector<LatticeTriangle> found = realize_sides(sides);
        r.realizations.insert(r.realizations.end(), found.begin(), found.end());
    }
    const std::set<CongruenceKey> oracle = enumerate_equable_classes(w);
    r.oracle_keys.assign(oracle.begin(), oracle.end());
    r.oracle_window = w.max_norm;
    r.agreement = diophantine_keys == oracle;
    return r;
}

EnumerationReport run_enumeration(int64_t bound) {
    EnumerationReport r;
    r.bound = bound;
    r.xyz_solutions = enumerate_xyz();
    for (const XyzSolution& s : r.xyz_solutions) {
        const std::array<Sqrt3Length, 3> sides = xyz_to_sides(s);
        r.side_triples.push_back({sides[0].n, sides[1].n, sides[2].n});
    }
    r.uvw_bruteforce = enumerate_uvw_bruteforce(bound);
    std::vector<UvwSolution> doubled;
    for (const XyzSolution& s : r.xyz_solutions) {
        const UvwSolution u{2 * s.x, 2 * s.y, 2 * s.z};
        if (u.u <= bound && u.v <= bound && u.w <= bound) doubled.push_back(u);
    }
    std::sort(doubled.begin(), doubled.end());
    r.agreement = doubled == r.uvw_bruteforce;
    return r;
}

std::string to_json(const ClassificationReport& r) {
    json j;
    j["kind"] = "classification";
    j["xyz_solutions"] = json::array();
    for (const XyzSolution& s : r.xyz_solutions)
        j["xyz_solutions"].push_back(triple_to_json(std::array{s.x, s.y, s.z}));
    j["side_triples"] = json::array();
    for (const auto& t : r.side_triples) j["side_triples"].push_back(triple_to_json(t));
    j["realizations"] = json::array();
    for (const LatticeTriangle& t : r.realizations)
        j["realizations"].push_back(triangle_to_json(t));
    j["oracle_keys"] = json::array();
    for (const CongruenceKey& k : r.oracle_keys) j["oracle_keys"].push_back(key_to_json(k));
    j["oracle_window"] = r.oracle_window;
    j["agreement"] = r.agreement;
    return j.dump(2);
}

std::string to_json(const EnumerationReport& r) {
    json j;
    j["kind"] = "enumeration";
    j["xyz_solutions"] = json::array();
    for (const XyzSolution& s : r.xyz_solutions)
        j["xyz_solutions"].push_back(triple_to_json(std::array{s.x, s.y, s.z}));
    j["side_triples"] = json::array();
    for (const auto& t : r.side_triples) j["side_triples"].push_back(triple_to_json(t));
    j["uvw_bruteforce"] = json::array();
    for (const UvwSolution& s : r.uvw_bruteforce)
        j["uvw_bruteforce"].push_back(triple_to_json(std::array{s.u, s.v, s.w}));
    j["bound"] = r.bound;
    j["agreement"] = r.agreement;
    return j.dump(2);
}

ClassificationReport classification_from_json(const std::string& text) {
    const json j = json::parse(text);
    require_kind(j, "classification");
    ClassificationReport r;
    for (const json& s : j.at("xyz_solutions")) {
        const auto [x, y, z] = array3_from_json(s);
        r.xyz_solutions.push_back({x, y, z});
    }
    for (const json& t : j.at("side_triples")) r.side_triples.push_back(array3_from_json(t));
    for (const json& t : j.at("realizations")) r.realizations.push_back(triangle_from_json(t));
    for (const json& k : j.at("oracle_keys")) r.oracle_keys.push_back({array3_from_json(k)});
    r.oracle_window = j.at("oracle_window").get<int64_t>();
    r.agreement = j.at("agreement").get<bool>();
    return r;
}

EnumerationReport enumeration_from_json(const std::string& text) {
    const json j = json::parse(text);
    require_kind(j, "enumeration");
    EnumerationReport r;
    for (const json& s : j.at("xyz_solutions")) {
        const auto [x, y, z] = array3_from_json(s);
        r.xyz_solutions.push_back({x, y, z});
    }
    for (const json& t : j.at("side_triples")) r.side_triples.push_back(array3_from_json(t));
    for (const json& s : j.at("uvw_bruteforce")) {
        const auto [u, v, w] = array3_from_json(s);
        r.uvw_bruteforce.push_back({u, v, w});
    }
    r.bound = j.at("bound").get<int64_t>();
    r.agreement = j.at("agreement").get<bool>();
    return r;
}

std::string to_text(const ClassificationReport& r) {
    std::ostringstream out;
    out << "Equable triangles on the Eisenstein lattice: two-route classification\n";
    out << "\n";
    out << "Diophantine route (3xyz = 4(x+y+z), x <= y <= z):\n";
    for (size_t i = 0; i < r.xyz_solutions.size(); ++i) {
        const XyzSolution& s = r.xyz_solutions[i];
        out << "  (x,y,z) = " << triple_string(s.x, s.y, s.z) << "  ->  sides "
            << sides_string(r.side_triples[i]) << "\n";
    }
    out << "\n";
    out << "Lattice realizations (one representative per congruence class, C = 0):\n";
    if (r.realizations.empty()) out << "  none\n";
    for (const LatticeTriangle& t : r.realizations) {
        const std::array<int64_t, 3> norms = side_norms(t);
        std::array<int64_t, 3> n{};
        int64_t n_sum = 0;
        for (size_t i = 0; i < 3; ++i) {
            n[i] = sqrt3_side_decomposition(norms[i]).value_or(0);
            n_sum += n[i];
        }
        out << "  A = " << t.A << ", B = " << t.B << ", C = " << t.C << "  sides "
            << sides_string(n) << ", perimeter = area = " << sqrt3_multiple_string(n_sum)
            << "\n";
    }
    out << "\n";
    out << "Search oracle (exhaustive over norm(A) <= " << r.oracle_window
        << ", norm(B) <= " << r.oracle_window << ", C = 0):\n";
    out << "  equable congruence keys:";
    if (r.oracle_keys.empty()) out << " none";
    for (size_t i = 0; i < r.oracle_keys.size(); ++i) {
        const auto& k = r.oracle_keys[i].norms;
        out << (i ? ", " : " ") << triple_string(k[0], k[1], k[2]);
    }
    out << "\n";
    out << "  note: the oracle certifies the classification only inside its window;\n";
    out << "  completeness beyond it rests on the Diophantine argument\n";
    out << "\n";
    out << "Routes agree: " << (r.agreement ? "yes" : "NO") << "\n";
    return out.str();
}

std::string to_text(const EnumerationReport& r) {
    std::ostringstream out;
    out << "Diophantine solutions by two routes\n";
    out << "\n";
    out << "Reduced equation 3xyz = 4(x+y+z), x <= y <= z (exact bounds x <= 2, y <= 3):\n";
    for (size_t i = 0; i < r.xyz_solutions.size(); ++i) {
        const XyzSolution& s = r.xyz_solutions[i];
        out << "  " << triple_string(s.x, s.y, s.z) << "  ->  sides "
            << sides_string(r.side_triples[i]) << "\n";
    }
    out << "\n";
    out << "Brute force on 3uvw = 16(u+v+w), u <= v <= w <= " << r.bound << ":\n";
    out << " ";
    if (r.uvw_bruteforce.empty()) out << " none";
    for (size_t i = 0; i < r.uvw_bruteforce.size(); ++i) {
        const UvwSolution& s = r.uvw_bruteforce[i];
        out << (i ? ", " : " ") << triple_string(s.u, s.v, s.w);
    }
    out << "\n";
    out << "\n";
    out << "Doubling cross-check ((u,v,w) = (2x,2y,2z) within the bound): "
        << (r.agreement ? "agree" : "DISAGREE") << "\n";
    return out.str();
}

std::string sqrt3_multiple_string(int64_t numerator, int64_t denominator) {
    if (denominator < 1)
        throw std::domain_error("sqrt3_multiple_string: denominator must be >= 1");
    if (numerator == 0) return "0";
    const bool negative = numerator < 0;
    int64_t n = std::abs(numerator);
    int64_t d = denominator;
    const int64_t g = std::gcd(n, d);
    n /= g;
    d /= g;
    std::string out = negative ? "-" : "";
    if (d == 1) {
        if (n != 1) out += std::to_string(n);
        out += "√3";
    } else {
        out += std::to_string(n) + "/" + std::to_string(d) + "·√3";
    }
    return out;
}

}  // namespace equable
