// Copyright 2026 The QECCD Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../oracle.hpp"
#include "qeccd/estimation.hpp"
#include "qeccd/protocol.hpp"

using namespace qeccd;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(const char* id, const char* title, double time_limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail << " [exception: " << e.what() << "]";
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= time_limit_s) {
        out.pass = false;
        out.detail << " [runtime " << elapsed << " s over " << time_limit_s << " s]";
    }
    if (!out.pass) ++failures;
    std::printf("%s %s  %s:%s (%.3f s)\n", id, out.pass ? "PASS" : "FAIL", title, out.detail.str().c_str(), elapsed);
    std::fflush(stdout);
}

Channel builtin(std::string_view name, std::vector<double> params) { return builtin_channel(name, params); }

ProcessMatrix oracle_chi(const StabilizerCode& code, const Channel& ch) {
    return ProcessMatrix(oracle::chi({ch.kraus().begin(), ch.kraus().end()}, ch.num_qubits()), code.error_basis());
}

std::vector<Complex> random_beta(std::size_t k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Complex> beta(std::size_t{1} << k);
    double norm = 0;
    for (auto& b : beta) {
        b = Complex(g(rng), g(rng));
        norm += std::norm(b);
    }
    for (auto& b : beta) b /= std::sqrt(norm);
    return beta;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<std::string> generator_strings(const StabilizerCode& code) {
    std::vector<std::string> out;
    for (const auto& g : code.generators()) out.push_back(g.str());
    return out;
}

}  // namespace

int main() {
    criterion("AC1", "built-in codes pass KL, injective syndromes, perfect, closed form", 1.0, [](Outcome& o) {
        double worst_kl = 0;
        for (auto [name, size] : {std::pair{"code3", 4u}, std::pair{"code5", 16u}}) {
            StabilizerCode code = builtin_code(name);
            double kl = knill_laflamme(code).residual;
            worst_kl = std::max(worst_kl, kl);
            o.require(kl < 1e-8, std::string(name) + " KL residual");
            std::set<std::uint64_t> distinct;
            for (std::size_t i = 0; i < code.error_basis().size(); ++i) {
                distinct.insert(code.syndrome(i).bits());
                unsigned expect = oracle::syndrome(generator_strings(code), code.error_basis().element(i).str());
                o.require(code.syndrome(i).bits() == expect, std::string(name) + " syndrome vs oracle");
            }
            o.require(code.syndrome_table().size() == size && distinct.size() == size,
                      std::string(name) + " injective table of " + std::to_string(size));
            HammingBound hb = hamming_bound(code.n(), code.k(), code.noisy_coords().size());
            o.require(hb.satisfied && hb.perfect, std::string(name) + " perfect");
        }
        StabilizerCode five = builtin_code("code5");
        int matches = 0;
        for (std::size_t i = 0; i < five.error_basis().size(); ++i) {
            const auto& e = five.error_basis().local(i);
            int u1 = e.x_mask() & 1, u2 = (e.x_mask() >> 1) & 1;
            int v1 = e.z_mask() & 1, v2 = (e.z_mask() >> 1) & 1;
            std::string expect = {char('0' + u2), char('0' + (v1 ^ v2)), char('0' + (u1 ^ v2)), char('0' + (u1 ^ u2))};
            matches += five.syndrome(i).str() == expect;
        }
        o.require(matches == 16, "closed form");
        o.detail << " max KL residual " << worst_kl << ", closed form " << matches << "/16";
    });

    criterion("AC2", "correlated flip bare distribution on code5", 1.0, [](Outcome& o) {
        StabilizerCode five = builtin_code("code5");
        std::size_t xx = five.error_basis().index_of(PauliOperator::from_string("XX"));
        double worst = 0;
        for (double p : {0.1, 0.3}) {
            MeasurementRecord rec =
                xi_simulated(five, uniform_beta(five), builtin("correlated-flip", {p}), bare_configuration(five));
            for (std::size_t x = 0; x < rec.size(); ++x) {
                double expect = x == 0 ? 1 - p : (x == xx ? p : 0.0);
                worst = std::max(worst, std::abs(rec.probabilities[x] - expect));
            }
        }
        o.require(worst < 1e-12, "deviation < 1e-12");
        o.detail << " XX syndrome " << five.syndrome(xx).str() << ", max deviation " << worst;
    });

    criterion("AC3", "amplitude damping end-to-end on code3", 1.0, [](Outcome& o) {
        StabilizerCode three = builtin_code("code3");
        Plan plan = plan_configurations(three);
        double worst = 0;
        for (double lambda : {0.1, 0.36, 0.75}) {
            Channel ch = builtin("amplitude-damping", {lambda});
            ProcessMatrix oracle_ad(oracle::chi(oracle::amplitude_damping(lambda), 1), three.error_basis());
            Reconstruction r = reconstruct(three, plan, simulate_plan(three, uniform_beta(three), ch, plan));
            worst = std::max(worst, compare(r.chi, oracle_ad).frobenius_error);
            if (lambda == 0.36) {
                auto near = [&](const char* a, const char* b, Complex v) {
                    return std::abs(r.chi.at(a, b) - v) < 1e-9;
                };
                o.require(near("I", "Z", 0.09) && near("Z", "I", 0.09), "chi_IZ = chi_ZI = 0.09");
                o.require(near("X", "Y", Complex(0, -0.09)) && near("Y", "X", Complex(0, 0.09)), "chi_XY = -0.09i");
                int nonzero = 0;
                for (std::size_t m = 0; m < 4; ++m)
                    for (std::size_t n = 0; n < 4; ++n)
                        if (m != n && std::abs(r.chi(m, n)) > 1e-9) ++nonzero;
                o.require(nonzero == 4, "exactly four nonzero off-diagonals");
                o.detail << " chi_IZ " << r.chi.at("I", "Z").real() << ", chi_XY " << r.chi.at("X", "Y").imag()
                         << "i,";
            }
        }
        o.require(worst < 1e-9, "Frobenius < 1e-9");
        o.detail << " max Frobenius error " << worst;
    });

    criterion("AC4", "random CPTP channels match the oracle", 30.0, [](Outcome& o) {
        double worst = 0;
        int count = 0;
        for (auto [name, qubits, channels] : {std::tuple{"code3", 1u, 50}, std::tuple{"code5", 2u, 10}}) {
            StabilizerCode code = builtin_code(name);
            Plan plan = plan_configurations(code);
            for (int s = 0; s < channels; ++s) {
                Channel ch = random_cp_channel(1000 + static_cast<std::uint64_t>(s), qubits, std::size_t{1} << (2 * qubits));
                o.require(validate_channel(ch).tp, "random channel is TP");
                Reconstruction r = reconstruct(code, plan, simulate_plan(code, uniform_beta(code), ch, plan));
                worst = std::max(worst, compare(r.chi, oracle_chi(code, ch)).frobenius_error);
                ++count;
            }
        }
        o.require(worst < 1e-8, "Frobenius < 1e-8");
        o.detail << " " << count << " channels, max Frobenius error " << worst;
    });

    criterion("AC5", "configuration count 1 + 2(d^2 - 1)", 10.0, [](Outcome& o) {
        std::size_t c3 = plan_configurations(builtin_code("code3")).configurations.size();
        std::size_t c5 = plan_configurations(builtin_code("code5")).configurations.size();
        o.require(c3 == 7, "code3 has 7");
        o.require(c5 == 31, "code5 has 31");
        o.detail << " code3 " << c3 << ", code5 " << c5;
    });

    criterion("AC6", "simulated and predicted syndrome probabilities agree", 30.0, [](Outcome& o) {
        double worst = 0;
        std::size_t checks = 0;
        std::vector<std::pair<const char*, Channel>> runs{
            {"code3", builtin("amplitude-damping", {0.1})},  {"code3", builtin("amplitude-damping", {0.36})},
            {"code3", builtin("amplitude-damping", {0.75})}, {"code5", builtin("correlated-flip", {0.1})},
            {"code5", builtin("correlated-flip", {0.3})}};
        for (const auto& [name, ch] : runs) {
            StabilizerCode code = builtin_code(name);
            Plan plan = plan_configurations(code);
            ProcessMatrix chi = oracle_chi(code, ch);
            auto records = simulate_plan(code, uniform_beta(code), ch, plan);
            for (std::size_t c = 0; c < plan.configurations.size(); ++c) {
                for (std::size_t x = 0; x < code.error_basis().size(); ++x) {
                    double diff = std::abs(records[c].probabilities[x] - xi_predicted(chi, code, plan.configurations[c], x));
                    worst = std::max(worst, diff);
                    ++checks;
                }
            }
        }
        o.require(worst < 1e-10, "|xi_sim - xi_pred| < 1e-10");
        o.detail << " " << checks << " probabilities, max difference " << worst;
    });

    criterion("AC7", "syndrome statistics independent of the encoded state", 30.0, [](Outcome& o) {
        double worst = 0;
        std::vector<std::pair<const char*, Channel>> runs{{"code3", builtin("amplitude-damping", {0.36})},
                                                          {"code5", builtin("correlated-flip", {0.3})},
                                                          {"code5", builtin("random-cp", {31, 2})}};
        for (const auto& [name, ch] : runs) {
            StabilizerCode code = builtin_code(name);
            Plan plan = plan_configurations(code);
            auto reference = simulate_plan(code, random_beta(code.k(), 0), ch, plan);
            for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                auto records = simulate_plan(code, random_beta(code.k(), seed), ch, plan);
                for (std::size_t c = 0; c < records.size(); ++c)
                    for (std::size_t x = 0; x < records[c].size(); ++x)
                        worst = std::max(worst, std::abs(records[c].probabilities[x] - reference[c].probabilities[x]));
            }
        }
        o.require(worst < 1e-10, "distributions equal to 1e-10");
        o.detail << " 10 random states per run, max difference " << worst;
    });

    criterion("AC8", "recovery restores the logical state, including after rotation", 30.0, [](Outcome& o) {
        double worst = 1.0;
        std::size_t cases = 0;
        for (const char* name : {"code3", "code5"}) {
            StabilizerCode code = builtin_code(name);
            Plan plan = plan_configurations(code);
            const ErrorBasis& basis = code.error_basis();
            StateVector psi = encode(code, random_beta(code.k(), 77));
            for (std::size_t e = 0; e < basis.size(); ++e) {
                StateVector hit(to_matrix(basis.element(e)) * psi.amplitudes());
                worst = std::min(worst, fidelity(recover(hit, code, code.syndrome(e)), psi));
                ++cases;
                DensityMatrix rho = outer(hit);
                for (const auto& cfg : plan.configurations) {
                    if (cfg.kind == ConfigurationKind::kBare) continue;
                    DensityMatrix rotated = apply_unitary(rho, cfg.unitary);
                    MeasurementRecord rec = measure(code, rotated, cfg, 0);
                    for (std::size_t x = 0; x < basis.size(); ++x) {
                        if (rec.probabilities[x] < 1e-9) continue;
                        DensityMatrix fixed = recover(collapse(code, rotated, x), code, code.syndrome(x));
                        worst = std::min(worst, fidelity(psi, fixed));
                        ++cases;
                    }
                }
            }
        }
        o.require(worst > 1 - 1e-10, "fidelity > 1 - 1e-10");
        o.detail << " " << cases << " cases, min fidelity 1 - " << (1 - worst);
    });

    criterion("AC9", "shot-noise scaling in sampled mode", 120.0, [](Outcome& o) {
        StabilizerCode three = builtin_code("code3");
        Plan plan = plan_configurations(three);
        Channel ch = builtin("amplitude-damping", {0.36});
        ProcessMatrix truth = oracle_chi(three, ch);
        auto exact = simulate_plan(three, uniform_beta(three), ch, plan);
        std::vector<double> shots{1e4, 1e5, 1e6};
        std::vector<double> medians;
        for (double s : shots) {
            std::vector<double> errors;
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                auto sampled = sample_records(exact, SamplingPolicy{static_cast<std::uint64_t>(s), seed});
                errors.push_back(compare(reconstruct(three, plan, sampled).chi, truth).frobenius_error);
            }
            medians.push_back(median(errors));
        }
        // Least-squares slope of log(median error) against log(shots).
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < shots.size(); ++i) {
            mx += std::log(shots[i]) / 3;
            my += std::log(medians[i]) / 3;
        }
        double sxy = 0, sxx = 0;
        for (std::size_t i = 0; i < shots.size(); ++i) {
            sxy += (std::log(shots[i]) - mx) * (std::log(medians[i]) - my);
            sxx += std::pow(std::log(shots[i]) - mx, 2);
        }
        double slope = sxy / sxx;
        o.require(medians[2] < 0.01, "median error at 1e6 shots < 0.01");
        o.require(slope >= -0.65 && slope <= -0.35, "slope in [-0.65, -0.35]");
        o.detail << " medians " << medians[0] << " / " << medians[1] << " / " << medians[2] << ", slope " << slope;
    });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
