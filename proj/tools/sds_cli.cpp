// Command-line front end: constructs and verifies difference sets, runs the
// shifted-difference-set simulator, and builds/solves dihedral HSP
// instances. One JSON document on stdout; diagnostics on stderr.
// Exit codes: 0 success, 1 verification/solve failure, 2 usage error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <random>
#include <iostream>
#include <optional>
#include <sstream>

#include "sds/dihedral.hpp"
#include "sds/diffset.hpp"
#include "sds/hidden_shift.hpp"
#include "sds/serialize.hpp"
#include "sds/spectrum.hpp"

namespace {

using sds::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--in", "cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

std::vector<sds::Coord> parse_coords(const std::string& s) {
    std::vector<sds::Coord> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

sds::FiniteField make_field(std::int64_t q, std::uint64_t seed,
                            const std::optional<std::vector<std::int64_t>>& mod) {
    // Factor q = p^n.
    std::int64_t p = q;
    int n = 1;
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            n = 0;
            std::int64_t t = q;
            while (t > 1) {
                if (t % d != 0)
                    throw CLI::ValidationError("--q", "not a prime power");
                t /= d;
                ++n;
            }
            break;
        }
    }
    if (mod) return sds::FiniteField(p, n, *mod);
    if (n == 1) return sds::FiniteField::prime_field(p);
    return sds::FiniteField::with_random_modulus(p, n, seed);
}

int cmd_construct(const std::string& family, std::int64_t q, int d, int n,
                  const std::string& modulus_str, std::uint64_t seed,
                  const std::string& out) {
    std::optional<std::vector<std::int64_t>> modulus;
    if (!modulus_str.empty()) modulus = parse_coords(modulus_str);
    if (family == "paley") {
        sds::FiniteField field = make_field(q, seed, modulus);
        auto D = sds::construct_paley(field);
        emit(sds::to_json(D, json{{"field", sds::to_json(field)}}), out);
    } else if (family == "hadamard") {
        auto spec = sds::inner_product_bent(n);
        auto D = sds::construct_hadamard(spec);
        json table = json::array();
        for (auto b : spec.table) table.push_back(int(b));
        emit(sds::to_json(D, json{{"bent_truth_table", table}}), out);
    } else if (family == "singer") {
        auto data = sds::construct_singer_data(q, d, modulus);
        emit(sds::to_json(data.set,
                          json{{"field", sds::to_json(data.field)},
                               {"alpha", data.alpha.element.coeffs}}),
             out);
    } else {
        throw CLI::ValidationError("family", "unknown family " + family);
    }
    return 0;
}

int cmd_verify(const std::string& in, const std::string& out) {
    json j = load_json(in);
    sds::AbelianGroup group = sds::group_from_json(j.at("group"));
    std::vector<sds::GroupElement> elems;
    for (const auto& e : j.at("elements"))
        elems.push_back(group.reduce(e.get<std::vector<sds::Coord>>()));
    auto res = sds::verify_difference_set(group, elems);
    if (res.ok()) {
        emit(json{{"ok", true},
                  {"params",
                   {{"v", res.params->v},
                    {"k", res.params->k},
                    {"lambda", res.params->lambda}}}},
             out);
        return 0;
    }
    emit(json{{"ok", false},
              {"reason", res.rejection->reason},
              {"witness",
               {{"a", res.rejection->witness_a.coords},
                {"b", res.rejection->witness_b.coords},
                {"count_a", res.rejection->count_a},
                {"count_b", res.rejection->count_b}}}},
         out);
    return 1;
}

int cmd_spectrum(const std::string& in, double tol, const std::string& out) {
    auto D = sds::diffset_from_json(load_json(in));
    auto rep = sds::turyn_check(D, tol);
    emit(sds::to_json(rep), out);
    return rep.pass ? 0 : 1;
}

int cmd_simulate_shift(const std::string& in, const std::string& secret_str,
                       std::uint64_t trials, std::uint64_t seed,
                       const std::string& out) {
    auto D = sds::diffset_from_json(load_json(in));
    sds::GroupElement s = D.group().reduce(parse_coords(secret_str));
    auto instance = sds::make_shift_instance(D, s);
    auto run = sds::run_algorithm1(instance);
    const auto& prm = D.params();
    double exact = run.peak_probability;
    double closed = sds::closed_form_peak_probability(prm.v, prm.k, prm.lambda);
    sds::Rational approx =
        sds::approx_success_probability(prm.v, prm.k, prm.lambda);
    auto counts = sds::sample(run.final_state, seed, trials);
    double empirical =
        trials == 0 ? 0.0
                    : static_cast<double>(counts[run.peak_index]) /
                          static_cast<double>(trials);
    auto solve = sds::recover_shift(instance, 0, seed);
    emit(json{{"params", {{"v", prm.v}, {"k", prm.k}, {"lambda", prm.lambda}}},
              {"secret", s.coords},
              {"peak_element",
               D.group().element_at(run.peak_index).coords},
              {"exact_peak_probability", exact},
              {"closed_form_peak_probability", closed},
              {"formula_4k_lambda_over_v",
               {{"num", approx.num}, {"den", approx.den}}},
              {"empirical_peak_rate", empirical},
              {"recovered_shift",
               solve.success ? json(solve.shift.coords) : json()},
              {"trials_used", solve.trials_used}},
         out);
    return solve.success ? 0 : 1;
}

int cmd_injectivize(const std::string& in, int m, std::uint64_t seed,
                    const std::string& out) {
    auto D = sds::diffset_from_json(load_json(in));
    const auto group = D.group();
    if (m == 0) m = sds::required_copies(group.order());
    auto fV = sds::injectivize(
        group, [D](const sds::GroupElement& x) { return D.contains(x) ? 1 : 0; },
        m, seed);
    json offsets = json::array();
    for (const auto& v : fV.offsets) offsets.push_back(v.coords);
    bool inj = sds::is_injective(fV);
    emit(json{{"m", m}, {"offsets", offsets}, {"injective", inj}}, out);
    return 0;
}

int cmd_dihedral_make(int d, std::uint64_t seed, bool hide_secret,
                      const std::string& out) {
    auto wb = sds::make_whitebox_instance(d, seed);
    emit(sds::to_json(wb, !hide_secret), out);
    return 0;
}

int cmd_dihedral_solve(const std::string& in, std::uint64_t trials,
                       std::uint64_t seed, const std::string& out) {
    auto wb = sds::whitebox_from_json(load_json(in));
    auto instance = sds::whitebox_to_hsp(wb, seed);
    auto res = sds::solve_dihedral_hsp(instance, trials, seed);
    json j{{"success", res.success},
           {"trials_used", res.trials_used},
           {"hiding_queries", res.hiding_queries},
           {"verify_queries", res.verify_queries}};
    if (res.success) j["generator"] = res.generator.coords;
    if (instance.hidden_generator)
        j["planted_generator"] = instance.hidden_generator->coords;
    emit(j, out);
    return res.success ? 0 : 1;
}

int cmd_gauss_check(std::int64_t q, const std::string& modulus_str,
                    std::uint64_t seed, double tol, const std::string& out) {
    std::optional<std::vector<std::int64_t>> modulus;
    if (!modulus_str.empty()) modulus = parse_coords(modulus_str);
    sds::FiniteField field = make_field(q, seed, modulus);
    auto alpha = sds::find_primitive(field);
    double dev = sds::gauss_all_pairs_max_deviation(field, alpha);
    bool pass = dev < tol;
    emit(json{{"q", q},
              {"target_magnitude", std::sqrt(static_cast<double>(q))},
              {"max_abs_deviation", dev},
              {"pass", pass}},
         out);
    return pass ? 0 : 1;
}

json sweep_row(const sds::DifferenceSet& D, std::uint64_t trials,
               std::uint64_t seed) {
    const auto& prm = D.params();
    std::mt19937_64 rng(seed);
    sds::GroupElement s = D.group().element_at(
        std::uniform_int_distribution<std::uint64_t>(0, D.group().order() - 1)(rng));
    auto run = sds::run_algorithm1(sds::make_shift_instance(D, s));
    auto counts = sds::sample(run.final_state, seed, trials);
    double empirical = trials == 0
                           ? 0.0
                           : static_cast<double>(counts[run.peak_index]) /
                                 static_cast<double>(trials);
    sds::Rational approx =
        sds::approx_success_probability(prm.v, prm.k, prm.lambda);
    return json{{"v", prm.v},
                {"k", prm.k},
                {"lambda", prm.lambda},
                {"family", D.family()},
                {"exact_peak_probability", run.peak_probability},
                {"formula_value", static_cast<double>(approx.num) /
                                      static_cast<double>(approx.den)},
                {"empirical_rate", empirical}};
}

int cmd_sweep(const std::string& family, const std::string& q_list, int d,
              const std::string& n_list, std::uint64_t trials,
              std::uint64_t seed, const std::string& out) {
    json rows = json::array();
    if (family == "singer") {
        for (sds::Coord q : parse_coords(q_list)) {
            try {
                rows.push_back(sweep_row(sds::construct_singer(q, d),
                                         trials, seed + rows.size()));
            } catch (const std::exception& e) {
                rows.push_back(json{{"q", q}, {"error", e.what()}});
            }
        }
    } else if (family == "hadamard") {
        for (sds::Coord n : parse_coords(n_list)) {
            try {
                rows.push_back(
                    sweep_row(sds::construct_hadamard(sds::inner_product_bent(
                                  static_cast<int>(n))),
                              trials, seed + rows.size()));
            } catch (const std::exception& e) {
                rows.push_back(json{{"n", n}, {"error", e.what()}});
            }
        }
    } else if (!family.empty()) {
        throw CLI::ValidationError("--family", "unknown family " + family);
    }
    emit(json{{"rows", rows}}, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shifted-difference-set toolkit"};
    app.require_subcommand(1);

    std::string family, in, out, modulus_str, secret_str, q_list, n_list,
        table_str;
    std::int64_t q = 0;
    int d = 2, n = 2, m = 0;
    std::uint64_t seed = 0, trials = 100;
    double tol = 1e-8;

    auto* construct = app.add_subcommand("construct", "construct a difference set");
    construct->add_option("family", family, "paley|hadamard|singer")->required();
    construct->add_option("--q", q, "field size (paley) or prime (singer)");
    construct->add_option("--d", d, "singer dimension parameter");
    construct->add_option("--n", n, "hadamard half-arity (group Z_2^(2n))");
    construct->add_option("--modulus", modulus_str, "field modulus c0,c1,...");
    construct->add_option("--seed", seed, "seed for modulus search");
    construct->add_option("--out", out, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "verify a difference set");
    verify->add_option("--in", in)->required();
    verify->add_option("--out", out);

    auto* spectrum = app.add_subcommand("spectrum", "Turyn flatness report");
    spectrum->add_option("--in", in)->required();
    spectrum->add_option("--tolerance", tol);
    spectrum->add_option("--out", out);

    auto* sim = app.add_subcommand("simulate-shift", "run the shift recovery");
    sim->add_option("--in", in)->required();
    sim->add_option("--secret", secret_str)->required();
    sim->add_option("--trials", trials);
    sim->add_option("--seed", seed);
    sim->add_option("--out", out);

    auto* inj = app.add_subcommand("injectivize", "draw injectivizing offsets");
    inj->add_option("--in", in)->required();
    inj->add_option("--m", m, "copies (default: required_copies)");
    inj->add_option("--seed", seed);
    inj->add_option("--out", out);

    bool hide_secret = false;
    auto* dmake = app.add_subcommand("dihedral-make", "white-box Singer instance");
    dmake->add_option("--d", d)->required();
    dmake->add_option("--seed", seed);
    dmake->add_flag("--hide-secret", hide_secret);
    dmake->add_option("--out", out);

    auto* dsolve = app.add_subcommand("dihedral-solve", "solve a dihedral HSP");
    dsolve->add_option("--in", in)->required();
    dsolve->add_option("--trials", trials);
    dsolve->add_option("--seed", seed);
    dsolve->add_option("--out", out);

    auto* gauss = app.add_subcommand("gauss-check", "Gauss sum magnitude sweep");
    gauss->add_option("--q", q)->required();
    gauss->add_option("--modulus", modulus_str);
    gauss->add_option("--seed", seed);
    gauss->add_option("--tolerance", tol);
    gauss->add_option("--out", out);

    auto* sweep = app.add_subcommand("sweep", "success-probability sweep");
    sweep->add_option("--family", family, "singer|hadamard")->required();
    sweep->add_option("--q-list", q_list, "comma list of primes (singer)");
    sweep->add_option("--d", d);
    sweep->add_option("--n-list", n_list, "comma list of n (hadamard)");
    sweep->add_option("--trials", trials);
    sweep->add_option("--seed", seed);
    sweep->add_option("--out", out);

    try {
        app.parse(argc, argv);
        if (construct->parsed())
            return cmd_construct(family, q, d, n, modulus_str, seed, out);
        if (verify->parsed()) return cmd_verify(in, out);
        if (spectrum->parsed()) return cmd_spectrum(in, tol, out);
        if (sim->parsed())
            return cmd_simulate_shift(in, secret_str, trials, seed, out);
        if (inj->parsed()) return cmd_injectivize(in, m, seed, out);
        if (dmake->parsed()) return cmd_dihedral_make(d, seed, hide_secret, out);
        if (dsolve->parsed()) return cmd_dihedral_solve(in, trials, seed, out);
        if (gauss->parsed())
            return cmd_gauss_check(q, modulus_str, seed, tol, out);
        if (sweep->parsed())
            return cmd_sweep(family, q_list, d, n_list, trials, seed, out);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
