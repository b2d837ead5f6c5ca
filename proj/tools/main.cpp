// Copyright 2026 The qrank authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qrank/errors.hpp"
#include "qrank/example_code.hpp"
#include "qrank/json_io.hpp"
#include "qrank/qconstruct.hpp"
#include "qrank/rng.hpp"
#include "qrank/stacked_sim.hpp"

using nlohmann::json;
using namespace qrank;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParam = 2;
constexpr int kExitVerification = 3;
constexpr int kExitBudget = 4;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

unsigned resolve_threads(unsigned flag_value) {
    // QRANK_THREADS overrides the flag; the flag defaults to hardware parallelism
    if (const char* env = std::getenv("QRANK_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    if (flag_value >= 1) return flag_value;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

json read_json_input(const std::string& in_path) {
    std::string text;
    if (in_path.empty()) {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(in_path);
        if (!in) throw std::invalid_argument("cannot open input file: " + in_path);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return json::parse(text);
}

struct ConstructArgs {
    std::string method = "proposed";
    unsigned m = 2, k = 1;
    unsigned n = 3, r = 1, s = 1;
    std::string modulus_hex, theta_hex, out;
    std::vector<std::string> alpha_hex;
};

int cmd_construct(const ConstructArgs& a) {
    BuiltCode built = [&] {
        if (a.method == "proposed") {
            std::optional<Field> field;
            if (!a.modulus_hex.empty()) field = Field(2 * a.m, fe_from_hex(a.modulus_hex));
            std::optional<std::vector<uint64_t>> alpha;
            if (!a.alpha_hex.empty()) {
                alpha.emplace();
                for (const auto& h : a.alpha_hex) alpha->push_back(fe_from_hex(h));
            }
            std::optional<uint64_t> theta;
            if (!a.theta_hex.empty()) theta = fe_from_hex(a.theta_hex);
            return build_proposed_code(a.m, a.k, field, alpha, theta);
        }
        if (a.method == "css") return build_css_code(a.n, a.r, a.s);
        throw std::invalid_argument("construct: --method must be proposed or css");
    }();
    emit(bundle_to_json(built).dump(2) + "\n", a.out);
    return kExitOk;
}

struct DistanceArgs {
    std::string in, out;
    uint64_t budget = uint64_t{1} << 24;
    unsigned threads = 0;
    uint64_t sample = 0;
    uint64_t seed = 0;
};

int cmd_distance(const DistanceArgs& a) {
    ParsedBundle bundle = bundle_from_json(read_json_input(a.in));
    DistanceCertificate cert =
        a.sample > 0 ? sample_distance(bundle.code, a.sample, a.seed)
                     : certify_distance(bundle.code, a.budget, resolve_threads(a.threads));
    emit(certificate_to_json(cert).dump(2) + "\n", a.out);
    return kExitOk;
}

// The full worked [[8,4,2]] construction with every intermediate object
// checked against its frozen reference value. Any mismatch exits nonzero.
int cmd_example(const std::string& out_path) {
    std::ostringstream os;
    unsigned failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        os << "  check: " << what << (ok ? " ... ok" : " ... FAIL") << "\n";
        if (!ok) ++failures;
    };

    Field f(example842::degree, example842::modulus);
    os << "modulus: x^4 + x + 1 (hex " << fe_to_hex(f.modulus()) << ")\n";

    std::vector<uint64_t> alpha(example842::alpha.begin(), example842::alpha.end());
    os << "self-dual basis alpha:";
    for (uint64_t x : alpha) os << " " << fe_to_hex(x);
    os << "\n";
    check(is_self_dual_basis(f, alpha), "trace Gram matrix of alpha is the identity");

    GabidulinCode classical(f, alpha, 1);
    check(is_hermitian_self_orthogonal(classical), "Gab(alpha, 1) is Hermitian self-orthogonal");

    ExpansionContext ctx = build_expansion_context(f, example842::theta);
    os << "normal basis (theta = " << fe_to_hex(example842::theta) << "):";
    for (uint64_t x : ctx.theta_basis.elements()) os << " " << fe_to_hex(x);
    os << "\n";
    check(std::equal(ctx.theta_basis.elements().begin(), ctx.theta_basis.elements().end(),
                     example842::theta_orbit.begin()),
          "normal basis matches the reference orbit");

    os << "T matrix:\n" << ctx.t_form.to_text();
    check(ctx.t_form == example842::expected_t_form(), "T matches the reference entry-for-entry");

    os << "D matrix:\n" << ctx.d.to_text();
    MatF2 s = symplectic_gram_matrix(2);
    check(mul(mul(ctx.d, ctx.t_form), ctx.d.transposed()) == s, "D T D^T = S");
    MatF2 dref = example842::expected_d();
    check(mul(mul(dref, ctx.t_form), dref.transposed()) == s,
          "the reference D satisfies D T D^T = S");

    BuiltCode built = build_proposed_code(2, 1, f, alpha, example842::theta);
    os << "binary generator matrix of the expanded code:\n" << built.code.generators().to_text();

    os << "stabilizer generators:\n";
    for (size_t r = 0; r < built.code.generators().rows(); ++r)
        os << "  " << pauli_from_row(built.code.generators().row(r), 4, 2).to_string() << "\n";

    MatF2 reference_images(0, 16);
    for (const char* str : example842::stabilizer_strings) {
        PauliString p = PauliString::parse(str);
        reference_images.append_row(from_layer_matrix(to_stacked_error(p).mat));
    }
    check(subspace_contains(built.code.generators(), reference_images),
          "reference generator strings lie in the generated group");
    check(reference_images.rank() == 4, "reference generator strings span the group");

    DistanceCertificate cert = certify_distance(built.code);
    os << "distance certificate: D_R = " << (cert.d_r ? std::to_string(*cert.d_r) : "undefined")
       << " over " << cert.enumerated << " dual vectors\n";
    check(cert.d_r && *cert.d_r == example842::expected_d_r && cert.certified,
          "certified minimum rank distance is 2");

    os << "parameters: [[" << built.params.N << ", " << built.params.K << ", "
       << (cert.d_r ? std::to_string(*cert.d_r) : "?") << "]]\n";
    check(built.params.N == example842::expected_n && built.params.K == example842::expected_k,
          "parameters are [[8, 4, 2]]");

    emit(os.str(), out_path);
    if (failures) {
        std::cerr << "example: " << failures << " reference check(s) failed\n";
        return kExitVerification;
    }
    return kExitOk;
}

struct CompareArgs {
    unsigned n = 2, k = 1;
    std::string format = "table", out;
};

int cmd_compare(const CompareArgs& a) {
    ComparisonTable t = compare_table(a.n, a.k);
    std::ostringstream os;
    auto show = [](const Rational& r) {
        std::ostringstream s;
        s << r.to_string() << " (~" << r.approx() << ")";
        return s.str();
    };
    if (a.format == "json") {
        json rows = json::array();
        for (const auto& row : t.rows) {
            rows.push_back({{"method", row.method},
                            {"layers", row.layers},
                            {"cells", row.cells},
                            {"N", row.N},
                            {"K", row.K},
                            {"D", row.D},
                            {"R", row.rate.to_string()},
                            {"R_approx", row.rate.approx()},
                            {"delta", row.delta.to_string()},
                            {"delta_approx", row.delta.approx()}});
        }
        json j{{"n", a.n},
               {"k", a.k},
               {"rows", rows},
               {"delta_ratio_vs_2n_minus_1", t.delta_ratio_minus.to_string()},
               {"delta_ratio_vs_2n_minus_1_approx", t.delta_ratio_minus.approx()},
               {"delta_ratio_vs_2n_plus_1", t.delta_ratio_plus.to_string()},
               {"delta_ratio_vs_2n_plus_1_approx", t.delta_ratio_plus.approx()}};
        os << j.dump(2) << "\n";
    } else if (a.format == "table") {
        os << "method              layout      N      K      D  R                delta\n";
        for (const auto& row : t.rows) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%-19s %3ux%-6u %6llu %6llu %3u  %-16s %s\n",
                          row.method.c_str(), row.layers, row.cells, row.N, row.K, row.D,
                          show(row.rate).c_str(), show(row.delta).c_str());
            os << buf;
        }
        os << "delta ratio vs 2n-1: " << show(t.delta_ratio_minus) << "\n";
        os << "delta ratio vs 2n+1: " << show(t.delta_ratio_plus) << "\n";
    } else {
        throw std::invalid_argument("compare: --format must be table or json");
    }
    emit(os.str(), a.out);
    return kExitOk;
}

struct SimulateArgs {
    unsigned m = 8, n = 8;
    unsigned gates = 20, faults = 3;
    uint64_t trials = 1000, seed = 0;
    std::string out;
};

int cmd_simulate(const SimulateArgs& a) {
    std::ostringstream os;
    uint64_t violations = 0, prop_violations = 0;
    double max_ratio = 0.0;
    for (uint64_t trial = 0; trial < a.trials; ++trial) {
        uint64_t trial_seed = derive_seed(a.seed, trial);
        SplitMix64 rng(trial_seed);
        std::vector<CliffordSymplectic> gates;
        gates.reserve(a.gates);
        for (unsigned g = 0; g < a.gates; ++g)
            gates.push_back(random_clifford_symplectic(a.n, rng.next()));
        unsigned t = static_cast<unsigned>(rng.below(a.faults + 1));
        // t distinct fault positions via a partial shuffle
        std::vector<unsigned> all(a.gates);
        for (unsigned i = 0; i < a.gates; ++i) all[i] = i;
        for (unsigned i = 0; i < t && i + 1 < a.gates; ++i)
            std::swap(all[i], all[i + rng.below(a.gates - i)]);
        std::vector<unsigned> positions(all.begin(), all.begin() + std::min(t, a.gates));
        std::sort(positions.begin(), positions.end());

        SimulationResult res = simulate_faulty_circuit(a.m, a.n, gates, positions, rng.next());
        if (!res.bound_ok) ++violations;
        prop_violations += res.rank_violations;
        if (res.faults > 0)
            max_ratio =
                std::max(max_ratio, static_cast<double>(res.rank_q) / (4.0 * res.faults));
        os << json{{"trial", trial},
                   {"t", res.faults},
                   {"rank_q", res.rank_q},
                   {"bound_ok", res.bound_ok}}
                  .dump()
           << "\n";
    }
    os << json{{"summary", true},
               {"trials", a.trials},
               {"violations", violations},
               {"propagation_rank_violations", prop_violations},
               {"max_rank_ratio", max_ratio}}
              .dump()
       << "\n";
    emit(os.str(), a.out);
    return violations == 0 && prop_violations == 0 ? kExitOk : kExitVerification;
}

int cmd_verify(const std::string& in_path) {
    json j = read_json_input(in_path);
    unsigned failures = 0;
    auto report = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok: " : "FAIL: ") << what << "\n";
        if (!ok) ++failures;
    };

    // parsing re-runs the independence and orthogonality checks
    ParsedBundle bundle = [&]() -> ParsedBundle {
        try {
            return bundle_from_json(j);
        } catch (const verification_error& e) {
            std::cout << "FAIL: " << e.what() << "\n";
            std::exit(kExitVerification);
        }
    }();
    report(true, "generators are independent");
    report(true, "generators are pairwise symplectically orthogonal");
    report(bundle.params.N == bundle.code.layers() * bundle.code.cells(),
           "N equals layers * cells");
    report(bundle.params.K == bundle.params.N - bundle.code.dim(), "K equals N - dim C");

    if (bundle.provenance.is_object()) {
        Field f = field_from_json(bundle.provenance.at("field"));
        report(true, "provenance field modulus is irreducible");
        std::vector<uint64_t> alpha;
        for (const auto& h : bundle.provenance.at("alpha"))
            alpha.push_back(fe_from_hex(h.get<std::string>()));
        report(is_self_dual_basis(f, alpha), "alpha is a self-dual basis");
        if (bundle.provenance.at("construction") == "proposed") {
            report(is_hermitian_self_orthogonal(
                       GabidulinCode(f, alpha, bundle.provenance.at("k").get<unsigned>())),
                   "classical code is Hermitian self-orthogonal");
        } else {
            uint64_t theta = fe_from_hex(bundle.provenance.at("theta").get<std::string>());
            bool orbit_ok = true;
            for (size_t i = 0; i < alpha.size(); ++i)
                orbit_ok &= alpha[i] == f.frobenius(theta, static_cast<unsigned>(i));
            report(orbit_ok, "alpha is the Frobenius orbit of theta");
        }
    }
    return failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and verification toolkit for quantum rank-metric codes "
                 "on stacked memories"};
    app.require_subcommand(1);

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand("construct", "build a code and print its bundle");
    construct->add_option("--method", ca.method, "proposed | css")->capture_default_str();
    construct->add_option("-m", ca.m, "half the layer count (proposed)");
    construct->add_option("-k", ca.k, "classical dimension (proposed), needs k < m");
    construct->add_option("-n", ca.n, "cells per layer (css), odd");
    construct->add_option("-r", ca.r, "X-part dimension (css)");
    construct->add_option("-s", ca.s, "Z-part dimension (css)");
    construct->add_option("--modulus", ca.modulus_hex, "field modulus override, hex");
    construct->add_option("--alpha", ca.alpha_hex, "evaluation points override, hex list");
    construct->add_option("--theta", ca.theta_hex, "normal basis generator override, hex");
    construct->add_option("--out", ca.out, "write to file instead of stdout");

    DistanceArgs da;
    CLI::App* distance = app.add_subcommand("distance", "certify D_R of a bundle from stdin");
    distance->add_option("--in", da.in, "bundle file (default: stdin)");
    distance->add_option("--budget", da.budget, "max dual vectors to enumerate");
    distance->add_option("--threads", da.threads, "worker threads (0 = auto)");
    distance->add_option("--sample", da.sample, "Monte Carlo samples instead of enumeration");
    distance->add_option("--seed", da.seed, "seed for --sample");
    distance->add_option("--out", da.out, "write to file instead of stdout");

    std::string example_out;
    CLI::App* example = app.add_subcommand("example", "run the worked [[8,4,2]] construction");
    example->add_option("--out", example_out, "write to file instead of stdout");

    CompareArgs cmpa;
    CLI::App* compare = app.add_subcommand("compare", "closed-form parameter comparison");
    compare->add_option("-n", cmpa.n, "layout parameter")->required();
    compare->add_option("-k", cmpa.k, "distance parameter, D = k + 1")->required();
    compare->add_option("--format", cmpa.format, "table | json")->capture_default_str();
    compare->add_option("--out", cmpa.out, "write to file instead of stdout");

    SimulateArgs sa;
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo faulty-circuit runs");
    simulate->add_option("-m", sa.m, "layers");
    simulate->add_option("-n", sa.n, "cells");
    simulate->add_option("--gates", sa.gates, "gates per circuit");
    simulate->add_option("--faults", sa.faults, "max faults per circuit");
    simulate->add_option("--trials", sa.trials, "number of circuits");
    simulate->add_option("--seed", sa.seed, "base seed");
    simulate->add_option("--out", sa.out, "write to file instead of stdout");

    std::string verify_in;
    CLI::App* verify = app.add_subcommand("verify", "re-check all invariants of a bundle");
    verify->add_option("--in", verify_in, "bundle file (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitParam;
    }

    try {
        if (construct->parsed()) return cmd_construct(ca);
        if (distance->parsed()) return cmd_distance(da);
        if (example->parsed()) return cmd_example(example_out);
        if (compare->parsed()) return cmd_compare(cmpa);
        if (simulate->parsed()) return cmd_simulate(sa);
        if (verify->parsed()) return cmd_verify(verify_in);
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const verification_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParam;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParam;
    }
    return kExitParam;
}
