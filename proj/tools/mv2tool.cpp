/// mv2tool: command-line front end for the mv2 library.
///
/// Reads a JSON problem file, dispatches one computation, prints one JSON
/// document to standard output. Exit codes: 0 success, 1 malformed input,
/// 2 precondition failure (the JSON carries error.kind and any witness).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mv2/errors.hpp"
#include "mv2/lattice.hpp"
#include "mv2/mvol.hpp"
#include "mv2/resultant.hpp"
#include "mv2/subdivision.hpp"
#include "mv2/vieta.hpp"

using json = nlohmann::json;

namespace {

long long as_int64(const mv2::BigInt& v) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw std::invalid_argument("value exceeds the 64-bit output range");
    return v.convert_to<long long>();
}

json vector_json(const mv2::IntVector& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(as_int64(e));
    return a;
}

/// A parsed problem file. Point order as written in the file defines the
/// coefficient order for gradings and exponent vectors; the canonical Support
/// order used internally is bridged by the index maps below.
struct Problem {
    int n = 0;
    std::vector<std::vector<mv2::IntVector>> file_points;
    std::vector<mv2::Support> supports;
    std::vector<std::vector<std::size_t>> file_to_canon;
    std::optional<mv2::IntVector> zeta;
    std::optional<mv2::IntVector> exponent_a;
    std::map<std::string, std::vector<long long>> gradings;
    std::optional<std::uint64_t> file_seed;

    std::size_t total_points() const {
        std::size_t t = 0;
        for (const auto& s : file_points) t += s.size();
        return t;
    }
};

mv2::IntVector parse_point(const json& j, int n, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw std::invalid_argument(std::string(what) + " must be an integer array of length " +
                                    std::to_string(n));
    mv2::IntVector v;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw std::invalid_argument(std::string(what) + " must contain integers only");
        v.push_back(e.get<long long>());
    }
    return v;
}

Problem parse_problem(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    json j;
    f >> j;

    Problem p;
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw std::invalid_argument("missing integer field: dimension");
    p.n = j["dimension"].get<int>();
    if (p.n < 1) throw std::invalid_argument("dimension must be positive");

    if (!j.contains("supports") || !j["supports"].is_array() || j["supports"].empty())
        throw std::invalid_argument("missing nonempty array field: supports");
    for (const auto& sj : j["supports"]) {
        if (!sj.is_array() || sj.empty())
            throw std::invalid_argument("every support must be a nonempty point array");
        std::vector<mv2::IntVector> pts;
        for (const auto& pj : sj) pts.push_back(parse_point(pj, p.n, "support point"));
        mv2::Support s(pts);
        if (s.size() != pts.size())
            throw std::invalid_argument(
                "duplicate point within a support (coefficient order would be ambiguous)");
        // map each file position to its slot in the canonical sorted order
        std::vector<std::size_t> fmap;
        const auto& canon = s.points();
        for (const auto& q : pts) {
            std::size_t k = 0;
            while (canon[k] != q) ++k;
            fmap.push_back(k);
        }
        p.file_points.push_back(std::move(pts));
        p.supports.push_back(std::move(s));
        p.file_to_canon.push_back(std::move(fmap));
    }

    if (j.contains("zeta")) p.zeta = parse_point(j["zeta"], p.n, "zeta");
    if (j.contains("exponent_a")) p.exponent_a = parse_point(j["exponent_a"], p.n, "exponent_a");
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
            throw std::invalid_argument("seed must be a nonnegative integer");
        p.file_seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("gradings")) {
        if (!j["gradings"].is_object())
            throw std::invalid_argument("gradings must be a name -> weight-array map");
        for (const auto& [name, wj] : j["gradings"].items()) {
            if (!wj.is_array() || wj.size() != p.total_points())
                throw std::invalid_argument("grading '" + name + "' must list one weight per support point");
            std::vector<long long> w;
            for (const auto& e : wj) {
                if (!e.is_number_integer() || e.get<long long>() < 1)
                    throw std::invalid_argument("grading '" + name + "' must be strictly positive");
                w.push_back(e.get<long long>());
            }
            p.gradings.emplace(name, std::move(w));
        }
    }
    return p;
}

std::vector<mv2::LatticePolytope> hulls(const Problem& p) {
    std::vector<mv2::LatticePolytope> P;
    for (const auto& s : p.supports) P.push_back(mv2::convex_hull(s));
    return P;
}

const mv2::IntVector& require_zeta(const Problem& p) {
    if (!p.zeta) throw std::invalid_argument("this command requires a zeta field");
    return *p.zeta;
}

const mv2::IntVector& require_a(const Problem& p) {
    if (!p.exponent_a) throw std::invalid_argument("this command requires an exponent_a field");
    return *p.exponent_a;
}

/// File-order flattened weights -> canonical per-support Grading.
mv2::Grading to_grading(const Problem& p, const std::vector<long long>& flat) {
    mv2::Grading g;
    std::size_t off = 0;
    for (std::size_t i = 0; i < p.supports.size(); ++i) {
        std::vector<mv2::BigInt> row(p.supports[i].size());
        for (std::size_t jf = 0; jf < p.file_points[i].size(); ++jf)
            row[p.file_to_canon[i][jf]] = flat[off + jf];
        g.weights.push_back(std::move(row));
        off += p.file_points[i].size();
    }
    return g;
}

/// Canonical-order exponent vector -> file order.
json exponents_json(const Problem& p, const std::vector<mv2::BigInt>& canon) {
    json out = json::array();
    std::size_t off = 0;
    for (std::size_t i = 0; i < p.supports.size(); ++i) {
        for (std::size_t jf = 0; jf < p.file_points[i].size(); ++jf)
            out.push_back(as_int64(canon[off + p.file_to_canon[i][jf]]));
        off += p.supports[i].size();
    }
    return out;
}

std::string sign_string(int value) { return value > 0 ? "+1" : "-1"; }

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& cli_seed, const Problem& p) {
    if (cli_seed) return *cli_seed;
    if (const char* env = std::getenv("RES_SIGN_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("RES_SIGN_SEED must be a nonnegative integer");
        }
    }
    if (p.file_seed) return *p.file_seed;
    return 0;
}

json run_mv(const Problem& p, std::uint64_t seed) {
    json out;
    out["mixed_volume"] = as_int64(mv2::mixed_volume_lattice(hulls(p), seed));
    out["seed"] = seed;
    return out;
}

json run_mv2(const Problem& p, std::uint64_t seed) {
    int v = mv2::mv2(mv2::MV2Query{hulls(p), require_zeta(p)}, seed);
    json out;
    out["mv2"] = v;
    out["sign"] = sign_string(v == 0 ? 1 : -1);
    out["seed"] = seed;
    return out;
}

json run_check_developed(const Problem& p) {
    auto rep = mv2::is_2_developed(hulls(p), require_zeta(p));
    json out;
    switch (rep.verdict) {
        case mv2::Developedness::prickly: out["verdict"] = "prickly"; break;
        case mv2::Developedness::two_developed: out["verdict"] = "two_developed"; break;
        case mv2::Developedness::neither: out["verdict"] = "neither"; break;
    }
    if (rep.witness) out["witness"] = vector_json(*rep.witness);
    return out;
}

json run_vieta_sign(const Problem& p, std::uint64_t seed) {
    auto s = mv2::vieta_sign(hulls(p), require_a(p), seed);
    json out;
    out["sign"] = sign_string(s.value);
    out["seed"] = seed;
    return out;
}

json run_binomial_sign(const Problem& p) {
    mv2::IntMatrix M;
    for (const auto& pts : p.file_points) {
        if (pts.size() != 2)
            throw std::invalid_argument(
                "binomial-sign expects every support to be a two-point segment {0, m_i}");
        M.push_back(mv2::sub(pts[1], pts[0]));
    }
    auto s = mv2::binomial_product_sign(mv2::BinomialSystem{M}, require_a(p));
    json out;
    out["sign"] = sign_string(s.value);
    return out;
}

json run_res_vertices(const Problem& p, std::uint64_t seed) {
    const int budget = 200;
    auto verts = mv2::resultant_vertices(mv2::ResultantInput{p.supports}, budget, seed);
    json arr = json::array();
    for (const auto& v : verts) arr.push_back(exponents_json(p, v.exponents));
    json out;
    out["vertices"] = arr;
    out["seeds_used"] = budget;
    out["seed"] = seed;
    return out;
}

json run_res_sign(const Problem& p, const std::string& pair, std::uint64_t seed) {
    std::string first, second;
    if (!pair.empty()) {
        auto comma = pair.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 == pair.size())
            throw std::invalid_argument("--pair expects two grading names: NAME,NAME");
        first = pair.substr(0, comma);
        second = pair.substr(comma + 1);
    } else if (p.gradings.size() == 2) {
        first = p.gradings.begin()->first;
        second = std::next(p.gradings.begin())->first;
    } else {
        throw std::invalid_argument(
            "res-sign needs --pair NAME,NAME unless the file has exactly two gradings");
    }
    auto g = p.gradings.find(first), s = p.gradings.find(second);
    if (g == p.gradings.end() || s == p.gradings.end())
        throw std::invalid_argument("unknown grading name in --pair");
    auto r = mv2::leading_sign_ratio(mv2::ResultantInput{p.supports}, to_grading(p, g->second),
                                     to_grading(p, s->second), seed);
    json out;
    out["ratio"] = sign_string(r.ratio.value);
    out["mv_parity"] = r.mv_parity;
    out["mv2"] = r.mv2_parity;
    out["seed"] = seed;
    return out;
}

json run_sylvester(const Problem& p) {
    if (p.supports.size() != 2)
        throw std::invalid_argument("sylvester expects exactly two univariate supports");
    auto R = mv2::univariate_resultant(p.supports[0], p.supports[1]);
    // re-sort by the file-order exponent vectors for a canonical term list
    std::map<std::vector<long long>, mv2::BigInt> terms;
    for (const auto& [e, c] : R) {
        std::vector<mv2::BigInt> canon(e.begin(), e.end());
        json fe = exponents_json(p, canon);
        std::vector<long long> key;
        for (const auto& x : fe) key.push_back(x.get<long long>());
        terms.emplace(std::move(key), c);
    }
    json arr = json::array();
    for (const auto& [e, c] : terms) {
        json term;
        term["exponents"] = e;
        term["coefficient"] = as_int64(c);
        arr.push_back(term);
    }
    json out;
    out["polynomial"] = arr;
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 2-mixed volumes, Vieta signs, and resultant combinatorics"};
    app.require_subcommand(1);

    std::string input, format = "json", pair;
    long long seed_arg = 0;
    bool seed_given = false;

    auto add_common = [&](CLI::App* cmd, bool takes_seed) {
        cmd->add_option("--input", input, "JSON problem file")->required();
        cmd->add_option("--format", format, "output format (json)");
        if (takes_seed)
            cmd->add_option("--seed", seed_arg, "override the lifting seed")
                ->check(CLI::NonNegativeNumber)
                ->each([&](const std::string&) { seed_given = true; });
    };

    add_common(app.add_subcommand("mv", "lattice mixed volume (Bernstein count)"), true);
    add_common(app.add_subcommand("mv2", "2-mixed volume against zeta"), true);
    add_common(app.add_subcommand("check-developed", "prickliness / 2-developedness verdict"),
               false);
    add_common(app.add_subcommand("vieta-sign", "sign of the Vieta product"), true);
    add_common(app.add_subcommand("binomial-sign", "exact binomial-system root product"), false);
    add_common(app.add_subcommand("res-vertices", "sampled resultant Newton vertices"), true);
    auto* res_sign = app.add_subcommand("res-sign", "sign ratio of extreme coefficients");
    add_common(res_sign, true);
    res_sign->add_option("--pair", pair, "grading names NAME,NAME");
    add_common(app.add_subcommand("sylvester", "exact univariate resultant"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (format != "json") throw std::invalid_argument("only --format json is supported");
        Problem p = parse_problem(input);
        std::optional<std::uint64_t> cli_seed;
        if (seed_given) cli_seed = static_cast<std::uint64_t>(seed_arg);
        std::uint64_t seed = resolve_seed(cli_seed, p);

        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "mv") emit(run_mv(p, seed));
        else if (cmd == "mv2") emit(run_mv2(p, seed));
        else if (cmd == "check-developed") emit(run_check_developed(p));
        else if (cmd == "vieta-sign") emit(run_vieta_sign(p, seed));
        else if (cmd == "binomial-sign") emit(run_binomial_sign(p));
        else if (cmd == "res-vertices") emit(run_res_vertices(p, seed));
        else if (cmd == "res-sign") emit(run_res_sign(p, pair, seed));
        else emit(run_sylvester(p));
        return 0;
    } catch (const mv2::precondition_error& e) {
        json err;
        err["error"]["kind"] = e.kind();
        err["error"]["message"] = e.what();
        if (e.witness()) err["error"]["witness"] = vector_json(*e.witness());
        emit(err);
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"]["kind"] = "InvalidInput";
        err["error"]["message"] = e.what();
        emit(err);
        return 1;
    }
}
