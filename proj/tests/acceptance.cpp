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

// Acceptance suite: one pass/fail line per criterion. The whole battery is
// executed three times (twice with 1 thread, once with 8) and the last
// criterion demands byte-identical certificates across the runs.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "qrank/errors.hpp"
#include "qrank/example_code.hpp"
#include "qrank/json_io.hpp"
#include "qrank/qconstruct.hpp"
#include "qrank/rng.hpp"
#include "qrank/stacked_sim.hpp"

using namespace qrank;

namespace {

struct Criterion {
    int id;
    bool pass;
    std::string detail;
    double seconds;
};

struct RunOutput {
    std::vector<Criterion> criteria;
    std::string certificates;
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

Field golden_field() { return Field(example842::degree, example842::modulus); }

std::vector<uint64_t> golden_alpha() {
    return std::vector<uint64_t>(example842::alpha.begin(), example842::alpha.end());
}

RunOutput run_battery(unsigned threads) {
    RunOutput out;
    std::ostringstream certs;

    // 1: exact reproduction of the worked construction's T and D
    {
        Timer timer;
        Field f = golden_field();
        ExpansionContext ctx = build_expansion_context(f, example842::theta);
        bool t_ok = ctx.t_form == example842::expected_t_form();
        MatF2 dref = example842::expected_d();
        bool d_ok = mul(mul(dref, ctx.t_form), dref.transposed()) == symplectic_gram_matrix(2);
        double sec = timer.seconds();
        bool pass = t_ok && d_ok && sec < 1.0;
        std::ostringstream d;
        d << "T exact: " << (t_ok ? "yes" : "NO") << ", reference D T D^T = S: "
          << (d_ok ? "yes" : "NO") << ", " << sec << " s";
        out.criteria.push_back({1, pass, d.str(), sec});
        certs << "T\n" << ctx.t_form.to_text() << "D\n" << ctx.d.to_text();
    }

    // 2: [[8,4,2]] certification over exactly 2^12 dual vectors
    {
        Timer timer;
        BuiltCode built = build_proposed_code(2, 1, golden_field(), golden_alpha(),
                                              example842::theta);
        DistanceCertificate cert = certify_distance(built.code, uint64_t{1} << 24, threads);
        double sec = timer.seconds();
        bool pass = built.params.N == 8 && built.params.K == 4 && cert.d_r && *cert.d_r == 2 &&
                    cert.witness_rank == 2 && cert.enumerated == 4096 && cert.certified &&
                    sec < 1.0;
        std::ostringstream d;
        d << "[[" << built.params.N << ", " << built.params.K << ", "
          << (cert.d_r ? std::to_string(*cert.d_r) : "?") << "]], " << cert.enumerated
          << " dual vectors, witness rank " << cert.witness_rank << ", " << sec << " s";
        out.criteria.push_back({2, pass, d.str(), sec});
        certs << bundle_to_json(built).dump() << "\n"
              << certificate_to_json(cert).dump() << "\n";
    }

    // 3: the four reference stabilizer strings generate the code
    {
        Timer timer;
        BuiltCode built = build_proposed_code(2, 1, golden_field(), golden_alpha(),
                                              example842::theta);
        std::vector<PauliString> ps;
        MatF2 images(0, 16);
        for (const char* s : example842::stabilizer_strings) {
            ps.push_back(PauliString::parse(s));
            images.append_row(from_layer_matrix(to_stacked_error(ps.back()).mat));
        }
        bool member = subspace_contains(built.code.generators(), images);
        bool span = images.rank() == 4;
        unsigned commuting_pairs = 0;
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j)
                if (commutes(ps[i], ps[j])) ++commuting_pairs;
        bool pass = member && span && commuting_pairs == 6;
        std::ostringstream d;
        d << "membership: " << (member ? "yes" : "NO") << ", span rank 4: "
          << (span ? "yes" : "NO") << ", commuting pairs: " << commuting_pairs << "/6";
        out.criteria.push_back({3, pass, d.str(), timer.seconds()});
        certs << images.to_text();
    }

    // 4: Hermitian self-orthogonality for every self-dual alpha, k <= m
    {
        Timer timer;
        unsigned checked = 0, failures = 0;
        for (unsigned m = 1; 2 * m <= 8; ++m) {
            Field f(2 * m);
            Basis sd = find_self_dual_basis(f);
            for (unsigned k = 1; k <= m; ++k) {
                ++checked;
                if (!is_hermitian_self_orthogonal(GabidulinCode(f, sd.elements(), k)))
                    ++failures;
            }
        }
        std::ostringstream d;
        d << checked << " (m, k) pairs, " << failures << " failures";
        out.criteria.push_back({4, failures == 0, d.str(), timer.seconds()});
        certs << "hermitian-suite " << checked << " " << failures << "\n";
    }

    // 5: trace-dual identity via expanded-kernel subspace equality
    {
        Timer timer;
        unsigned checked = 0, failures = 0;
        for (unsigned n : {3u, 5u}) {
            Field f(n);
            Basis sdn = find_self_dual_normal_basis(f);
            for (unsigned r = 1; r < n; ++r) {
                ++checked;
                GabidulinCode code(f, sdn.elements(), r);
                MatF2 complement = binary_expansion(code, sdn).kernel();
                MatF2 dual_expanded = binary_expansion(trace_dual_code(code), sdn);
                if (!subspace_equal(complement, dual_expanded)) ++failures;
            }
        }
        std::ostringstream d;
        d << checked << " (n, r) pairs, " << failures << " failures";
        out.criteria.push_back({5, failures == 0, d.str(), timer.seconds()});
        certs << "trace-dual-suite " << checked << " " << failures << "\n";
    }

    // 6: css cross-check [[9, 3, 2]]
    {
        Timer timer;
        BuiltCode css = build_css_code(3, 1, 1);  // construction verifies self-orthogonality
        DistanceCertificate cert = certify_distance(css.code, uint64_t{1} << 24, threads);
        double sec = timer.seconds();
        bool pass = css.params.N == 9 && css.params.K == 3 && cert.d_r && *cert.d_r == 2 &&
                    cert.certified && sec < 5.0;
        std::ostringstream d;
        d << "[[" << css.params.N << ", " << css.params.K << ", "
          << (cert.d_r ? std::to_string(*cert.d_r) : "?") << "]], " << sec << " s";
        out.criteria.push_back({6, pass, d.str(), sec});
        certs << bundle_to_json(css).dump() << "\n" << certificate_to_json(cert).dump() << "\n";
    }

    // 7: MRD property for every (n, k) within the 2^20 enumeration bound
    {
        Timer timer;
        unsigned checked = 0, failures = 0;
        std::ostringstream dvals;
        for (unsigned n = 1; n <= 20; ++n) {
            Field f(n);
            std::vector<uint64_t> alpha;
            for (unsigned i = 0; i < n; ++i) alpha.push_back(uint64_t{1} << i);
            for (unsigned k = 1; k <= n && n * k <= 20; ++k) {
                ++checked;
                RankDistanceResult r = min_rank_distance_bruteforce(GabidulinCode(f, alpha, k),
                                                                    uint64_t{1} << 20);
                if (r.d != n - k + 1) ++failures;
                dvals << n << "," << k << "=" << r.d << ";";
            }
        }
        std::ostringstream d;
        d << checked << " (n, k) pairs, " << failures << " deviations";
        out.criteria.push_back({7, failures == 0, d.str(), timer.seconds()});
        certs << "mrd-suite " << dvals.str() << "\n";
    }

    // 8: rank equivalence across the entire Hermitian dual of the worked code
    {
        Timer timer;
        Field f = golden_field();
        ExpansionContext ctx = build_expansion_context(f, example842::theta);
        GabidulinCode code(f, golden_alpha(), 1);
        auto dual_rows = hermitian_dual(code);
        uint64_t total = 0, mismatches = 0;
        std::vector<uint64_t> c(4);
        for (uint64_t a = 0; a < 16; ++a)
            for (uint64_t b = 0; b < 16; ++b)
                for (uint64_t g = 0; g < 16; ++g) {
                    for (size_t j = 0; j < 4; ++j)
                        c[j] = f.mul(a, dual_rows[0][j]) ^ f.mul(b, dual_rows[1][j]) ^
                               f.mul(g, dual_rows[2][j]);
                    ++total;
                    unsigned lhs = static_cast<unsigned>(
                        to_layer_matrix(expand_codeword(ctx, c), 4, 2).rank());
                    if (lhs != rank_weight({f, c})) ++mismatches;
                }
        std::ostringstream d;
        d << "all " << total << " vectors of the Hermitian dual, " << mismatches
          << " mismatches";
        out.criteria.push_back({8, mismatches == 0, d.str(), timer.seconds()});
        certs << "rank-equivalence " << total << " " << mismatches << "\n";
    }

    // 9: Monte Carlo bound rank(Q) <= 4t over 10^4 faulty circuits at (8, 8)
    {
        Timer timer;
        const unsigned kTrials = 10000, kGates = 20, kMaxFaults = 5;
        uint64_t bound_violations = 0, prop_violations = 0;
        double max_ratio = 0.0;
        for (unsigned trial = 0; trial < kTrials; ++trial) {
            SplitMix64 rng(derive_seed(20260808, trial));
            std::vector<CliffordSymplectic> gates;
            gates.reserve(kGates);
            for (unsigned g = 0; g < kGates; ++g)
                gates.push_back(random_clifford_symplectic(8, rng.next()));
            unsigned t = static_cast<unsigned>(rng.below(kMaxFaults + 1));
            std::vector<unsigned> all(kGates);
            for (unsigned i = 0; i < kGates; ++i) all[i] = i;
            for (unsigned i = 0; i < t; ++i)
                std::swap(all[i], all[i + rng.below(kGates - i)]);
            std::vector<unsigned> positions(all.begin(), all.begin() + t);
            std::sort(positions.begin(), positions.end());
            SimulationResult res = simulate_faulty_circuit(8, 8, gates, positions, rng.next());
            if (!res.bound_ok) ++bound_violations;
            prop_violations += res.rank_violations;
            if (res.faults)
                max_ratio = std::max(max_ratio,
                                     static_cast<double>(res.rank_q) / (4.0 * res.faults));
        }
        double sec = timer.seconds();
        bool pass = bound_violations == 0 && prop_violations == 0 && sec < 60.0;
        std::ostringstream d;
        d << kTrials << " trials, " << bound_violations << " bound violations, "
          << prop_violations << " propagation rank violations, max rank(Q)/4t = " << max_ratio
          << ", " << sec << " s";
        out.criteria.push_back({9, pass, d.str(), sec});
        certs << "simulation " << bound_violations << " " << prop_violations << " " << max_ratio
              << "\n";
    }

    // 10: closed-form table agreement as exact rationals
    {
        Timer timer;
        unsigned failures = 0;
        auto expect = [&](const Rational& got, long long num, long long den) {
            Rational want = Rational::make(num, den);
            if (got.num != want.num || got.den != want.den) ++failures;
        };
        for (auto [n, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {3, 2},
                                                                      {5, 2}}) {
            ComparisonTable t = compare_table(n, k);
            long long lm = 2ll * n - 1, lp = 2ll * n + 1, kk = k;
            // conventional layouts
            if (t.rows[0].N != static_cast<unsigned long long>(lm * lm)) ++failures;
            if (t.rows[0].K != static_cast<unsigned long long>(lm * (2 * n - 2 * kk - 1)))
                ++failures;
            if (t.rows[0].D != k + 1) ++failures;
            expect(t.rows[0].rate, lm - 2 * kk, lm);
            expect(t.rows[0].delta, kk + 1, lm * lm);
            if (t.rows[1].N != static_cast<unsigned long long>(lp * lp)) ++failures;
            if (t.rows[1].K != static_cast<unsigned long long>(lp * (2 * n - 2 * kk + 1)))
                ++failures;
            expect(t.rows[1].rate, lp - 2 * kk, lp);
            expect(t.rows[1].delta, kk + 1, lp * lp);
            // the 2n x n layout
            if (t.rows[2].N != 2ull * n * n) ++failures;
            if (t.rows[2].K != 2ull * n * (n - k)) ++failures;
            expect(t.rows[2].rate, n - kk, n);
            expect(t.rows[2].delta, kk + 1, 2ll * n * n);
            certs << "table " << n << "," << k << " " << t.rows[2].rate.to_string() << " "
                  << t.rows[2].delta.to_string() << "\n";
        }
        ComparisonTable big = compare_table(50, 1);
        double ratio_m = big.delta_ratio_minus.approx();
        double ratio_p = big.delta_ratio_plus.approx();
        bool ratio_ok = ratio_m >= 1.9 && ratio_m <= 2.1 && ratio_p >= 1.9 && ratio_p <= 2.1;
        if (!ratio_ok) ++failures;
        std::ostringstream d;
        d << "4 parameter sets, " << failures << " mismatches, delta ratios at n=50: " << ratio_m
          << " and " << ratio_p;
        out.criteria.push_back({10, failures == 0, d.str(), timer.seconds()});
        certs << "ratios " << big.delta_ratio_minus.to_string() << " "
              << big.delta_ratio_plus.to_string() << "\n";
    }

    out.certificates = certs.str();
    return out;
}

const char* label(int id) {
    switch (id) {
        case 1: return "reference T and D reproduction";
        case 2: return "[[8,4,2]] certification";
        case 3: return "reference stabilizer membership";
        case 4: return "Hermitian self-orthogonality suite";
        case 5: return "trace-dual suite";
        case 6: return "css [[9,3,2]] cross-check";
        case 7: return "MRD brute-force suite";
        case 8: return "rank-equivalence over the Hermitian dual";
        case 9: return "fault-propagation Monte Carlo";
        case 10: return "closed-form table agreement";
        case 11: return "determinism across runs and thread counts";
    }
    return "?";
}

}  // namespace

int main() {
    RunOutput first = run_battery(1);
    RunOutput second = run_battery(1);
    RunOutput threaded = run_battery(8);

    bool all_pass = true;
    for (const Criterion& c : first.criteria) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " — " << label(c.id)
                  << " (" << c.detail << ")\n";
        all_pass &= c.pass;
    }

    bool repeat_ok = first.certificates == second.certificates;
    bool thread_ok = first.certificates == threaded.certificates;
    bool det = repeat_ok && thread_ok;
    std::cout << (det ? "PASS" : "FAIL") << "  criterion 11 — " << label(11)
              << " (repeat run byte-identical: " << (repeat_ok ? "yes" : "NO")
              << ", 8-thread run byte-identical: " << (thread_ok ? "yes" : "NO") << ")\n";
    all_pass &= det;

    return all_pass ? 0 : 1;
}
