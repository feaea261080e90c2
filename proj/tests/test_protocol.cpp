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


#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracle.hpp"
#include "qeccd/errors.hpp"
#include "qeccd/protocol.hpp"

namespace qeccd {
namespace {

std::size_t idx(const StabilizerCode& code, const char* word) {
    return code.error_basis().index_of(PauliOperator::from_string(word));
}

Channel builtin(std::string_view name, std::vector<double> params) { return builtin_channel(name, params); }

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

/// Oracle chi expressed over the code's noisy coordinates.
ProcessMatrix oracle_chi(const StabilizerCode& code, const Channel& ch) {
    std::vector<oracle::M> kraus(ch.kraus().begin(), ch.kraus().end());
    return ProcessMatrix(oracle::chi(kraus, ch.num_qubits()), code.error_basis());
}

std::vector<Channel> channels_for(const StabilizerCode& code) {
    if (code.noisy_coords().size() == 1) {
        return {builtin("identity", {}), builtin("amplitude-damping", {0.36}), builtin("phase-damping", {0.3}),
                builtin("depolarizing", {0.25}), builtin("random-cp", {5})};
    }
    return {builtin("identity", {2}), builtin("correlated-flip", {0.3}), builtin("depolarizing", {0.2, 2}),
            builtin("random-cp", {6, 2})};
}

TEST(Encode, Examples) {
    StabilizerCode code = builtin_code("code3");
    std::vector<Complex> zero{1, 0};
    EXPECT_NEAR(fidelity(encode(code, zero), code.logical_basis()[0]), 1.0, 1e-14);

    std::vector<Complex> plus{1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};
    StateVector psi = encode(code, plus);
    for (const char* g : {"XIX", "YYZ"}) {
        EXPECT_LT((oracle::word(g) * psi.amplitudes() - psi.amplitudes()).norm(), 1e-10);
    }
    StabilizerCode five = builtin_code("code5");
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        StateVector s = encode(five, random_beta(1, seed));
        for (const auto& g : five.generators()) {
            EXPECT_LT((to_matrix(g) * s.amplitudes() - s.amplitudes()).norm(), 1e-10);
        }
    }
    std::vector<Complex> bad{1, 1};
    EXPECT_THROW(encode(code, bad), ValidationError);
    std::vector<Complex> wrong_length{1};
    EXPECT_THROW(encode(code, wrong_length), Error);
}

TEST(PauliFactors, Examples) {
    StabilizerCode three = builtin_code("code3");
    const ErrorBasis& basis = three.error_basis();
    auto i = [&](const char* w) { return basis.index_of(PauliOperator::from_string(w)); };

    PauliFactors f = pauli_factors(basis, i("X"), i("Y"), i("Z"));
    EXPECT_EQ(f.g_a, PauliFactor::minus_i());
    EXPECT_EQ(f.a, i("Y"));
    EXPECT_EQ(f.g_b, PauliFactor::i());
    EXPECT_EQ(f.b, i("X"));
    EXPECT_TRUE(f.same_type);

    PauliFactors g = pauli_factors(basis, i("I"), i("Y"), i("I"));
    EXPECT_EQ(g.g_a, PauliFactor::one());
    EXPECT_EQ(g.a, i("I"));
    EXPECT_EQ(g.g_b, PauliFactor::one());
    EXPECT_EQ(g.b, i("Y"));
    EXPECT_TRUE(g.same_type);

    StabilizerCode five_code = builtin_code("code5");
    const ErrorBasis& five = five_code.error_basis();
    for (std::size_t p = 0; p < five.size(); ++p) {
        PauliFactors h = pauli_factors(five, 0, p, 0);
        EXPECT_EQ(h.a, 0u);
        EXPECT_EQ(h.b, p);
        EXPECT_EQ(h.g_a, PauliFactor::one());
        EXPECT_EQ(h.g_b, PauliFactor::one());
    }
}

TEST(RotationUnitary, FollowsCommutation) {
    StabilizerCode code = builtin_code("code3");
    Matrix anti = rotation_unitary(code, idx(code, "X"), idx(code, "Y"));
    EXPECT_LT((anti - (oracle::word("XII") + oracle::word("YII")) / std::sqrt(2.0)).norm(), 1e-12);
    Matrix comm = rotation_unitary(code, idx(code, "I"), idx(code, "Z"));
    EXPECT_LT((comm - (oracle::word("III") + Complex(0, 1) * oracle::word("ZII")) / std::sqrt(2.0)).norm(), 1e-12);
    EXPECT_THROW(rotation_unitary(code, 1, 1), ValidationError);
}

TEST(XiPredicted, Examples) {
    StabilizerCode five = builtin_code("code5");
    for (double p : {0.1, 0.3}) {
        ProcessMatrix chi = oracle_chi(five, builtin("correlated-flip", {p}));
        EXPECT_NEAR(xi_predicted(chi, five, bare_configuration(five), 0), 1 - p, 1e-14);
    }

    StabilizerCode three = builtin_code("code3");
    Configuration xy = rotated_configuration(three, idx(three, "X"), idx(three, "Y"));
    std::size_t z = idx(three, "Z");
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        ProcessMatrix chi = oracle_chi(three, random_cp_channel(seed, 1, 4));
        double expect = 0.5 * (chi.at("X", "X").real() + chi.at("Y", "Y").real()) - chi.at("X", "Y").real();
        EXPECT_NEAR(xi_predicted(chi, three, xy, z), expect, 1e-14);
    }
    ProcessMatrix ad = oracle_chi(three, builtin("amplitude-damping", {0.36}));
    EXPECT_NEAR(xi_predicted(ad, three, xy, z), 0.09, 1e-12);
}

TEST(XiPredicted, RotatedXYReadoutsCarryTheRightComponents) {
    StabilizerCode three = builtin_code("code3");
    Configuration xy = rotated_configuration(three, idx(three, "X"), idx(three, "Y"));
    for (const char* outcome : {"I", "Z"}) {
        LinearReadout r = readout_for(three, xy, 0, idx(three, outcome));
        EXPECT_EQ(std::set<std::size_t>({r.a, r.b}), std::set<std::size_t>({idx(three, "X"), idx(three, "Y")}));
        EXPECT_NE(r.re_coeff, 0);
        EXPECT_EQ(r.im_coeff, 0);
    }
    for (const char* outcome : {"X", "Y"}) {
        LinearReadout r = readout_for(three, xy, 0, idx(three, outcome));
        EXPECT_EQ(std::set<std::size_t>({r.a, r.b}), std::set<std::size_t>({idx(three, "I"), idx(three, "Z")}));
        EXPECT_EQ(r.re_coeff, 0);
        EXPECT_NE(r.im_coeff, 0);
    }
}

TEST(XiSimulated, Examples) {
    StabilizerCode three = builtin_code("code3");
    auto beta3 = uniform_beta(three);
    MeasurementRecord id = xi_simulated(three, beta3, builtin("identity", {}), bare_configuration(three));
    EXPECT_NEAR(id.probabilities[0], 1.0, 1e-12);
    for (std::size_t x = 1; x < id.size(); ++x) EXPECT_NEAR(id.probabilities[x], 0.0, 1e-12);

    StabilizerCode five = builtin_code("code5");
    auto beta5 = uniform_beta(five);
    for (double p : {0.1, 0.3}) {
        MeasurementRecord rec = xi_simulated(five, beta5, builtin("correlated-flip", {p}), bare_configuration(five));
        std::size_t xx = idx(five, "XX");
        for (std::size_t x = 0; x < rec.size(); ++x) {
            double expect = x == 0 ? 1 - p : (x == xx ? p : 0.0);
            EXPECT_NEAR(rec.probabilities[x], expect, 1e-12);
        }
    }

    MeasurementRecord ad =
        xi_simulated(three, beta3, builtin("amplitude-damping", {0.36}), bare_configuration(three));
    EXPECT_NEAR(ad.probabilities[idx(three, "I")], 0.81, 1e-12);
    EXPECT_NEAR(ad.probabilities[idx(three, "Z")], 0.01, 1e-12);
    EXPECT_NEAR(ad.probabilities[idx(three, "X")], 0.09, 1e-12);
    EXPECT_NEAR(ad.probabilities[idx(three, "Y")], 0.09, 1e-12);
}

TEST(XiSimulated, MatchesOracleProjectorProbabilities) {
    StabilizerCode three = builtin_code("code3");
    std::vector<std::string> gens{"XIX", "YYZ"};
    auto beta = random_beta(1, 3);
    Channel ch = builtin("random-cp", {9});
    oracle::M rho = oracle::apply(outer(encode(three, beta)).matrix(), {ch.kraus().begin(), ch.kraus().end()}, {0}, 3);
    MeasurementRecord rec = xi_simulated(three, beta, ch, bare_configuration(three));
    for (std::size_t x = 0; x < rec.size(); ++x) {
        oracle::M proj = oracle::syndrome_projector(gens, static_cast<unsigned>(three.syndrome(x).bits()));
        EXPECT_NEAR(rec.probabilities[x], (proj * rho).trace().real(), 1e-12);
    }
}

TEST(BuildToggle, PaperAssignmentOnCode3) {
    StabilizerCode code = builtin_code("code3");
    // Basis order is (I, Z, X, Y); theta_I = theta_Y = +, theta_Z = theta_X = -.
    std::vector<int> theta{1, -1, -1, 1};
    Matrix s = build_toggle(code, theta);
    EXPECT_LT(unitarity_defect(s), 1e-12);
    const Complex gamma(1, 1);
    std::map<std::string, Complex> expect{{"I", gamma}, {"X", std::conj(gamma)}, {"Y", gamma}, {"Z", std::conj(gamma)}};
    for (std::size_t m = 0; m < 4; ++m) {
        Matrix pm = error_space_projector(code, m).matrix();
        EXPECT_LT((s * pm - expect[code.error_basis().label(m)] / std::sqrt(2.0) * pm).norm(), 1e-12);
    }

    std::vector<int> equal{1, 1, 1, 1};
    EXPECT_THROW(build_toggle(code, equal), ValidationError);
    std::vector<int> unbalanced{1, 1, 1, -1};
    EXPECT_THROW(build_toggle(code, unbalanced), ValidationError);
    std::vector<int> short_theta{1, -1};
    EXPECT_THROW(build_toggle(code, short_theta), ValidationError);
}

TEST(BuildToggle, CorrectableStatesAreEigenstates) {
    for (const char* name : {"code3", "code5"}) {
        StabilizerCode code = builtin_code(name);
        const std::size_t d2 = code.error_basis().size();
        std::vector<int> theta(d2);
        for (std::size_t m = 0; m < d2; ++m) theta[m] = m % 2 ? -1 : 1;
        Matrix s = build_toggle(code, theta);
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            Vector psi = encode(code, random_beta(code.k(), seed)).amplitudes();
            for (std::size_t m = 0; m < d2; ++m) {
                Vector fm = to_matrix(code.error_basis().element(m)) * psi;
                Complex phase = std::exp(Complex(0, theta[m] * M_PI / 4));
                EXPECT_LT((s * fm - phase * fm).norm(), 1e-10);
            }
        }
    }
}

TEST(ToggleChi, ConjugationAndInvariants) {
    StabilizerCode code = builtin_code("code3");
    std::vector<int> theta{1, -1, -1, 1};
    ProcessMatrix ad = oracle_chi(code, builtin("amplitude-damping", {0.36}));
    ProcessMatrix toggled = toggle_chi(ad, theta);
    EXPECT_NEAR(std::abs(toggled.at("I", "Z") - Complex(0, 1) * ad.at("I", "Z")), 0.0, 1e-14);

    StabilizerCode five = builtin_code("code5");
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        ProcessMatrix chi = oracle_chi(five, random_cp_channel(seed, 2, 16));
        std::vector<int> t(16);
        std::mt19937_64 rng(seed);
        for (std::size_t m = 0; m < 16; ++m) t[m] = m < 8 ? 1 : -1;
        std::shuffle(t.begin(), t.end(), rng);
        ProcessMatrix tc = toggle_chi(chi, t);
        for (std::size_t m = 0; m < 16; ++m) {
            EXPECT_EQ(tc(m, m), chi(m, m));
            for (std::size_t n = 0; n < 16; ++n) {
                if (t[m] == t[n]) {
                    EXPECT_NEAR(std::abs(tc(m, n) - chi(m, n)), 0.0, 1e-14);
                } else {
                    // Real and imaginary parts trade places, with a sign.
                    double sgn = t[m] > 0 ? 1.0 : -1.0;
                    EXPECT_NEAR(tc(m, n).real(), -sgn * chi(m, n).imag(), 1e-14);
                    EXPECT_NEAR(tc(m, n).imag(), sgn * chi(m, n).real(), 1e-14);
                }
            }
        }
    }
}

TEST(PlanConfigurations, CountsUnitarityAndCoverage) {
    for (auto [name, count] : {std::pair{"code3", 7u}, std::pair{"code5", 31u}}) {
        StabilizerCode code = builtin_code(name);
        Plan plan = plan_configurations(code);
        const std::size_t d2 = code.error_basis().size();
        EXPECT_EQ(plan.configurations.size(), count);
        EXPECT_EQ(plan.configurations.size(), 1 + 2 * (d2 - 1));
        EXPECT_EQ(plan.readouts.size(), plan.configurations.size() * d2);
        for (const auto& cfg : plan.configurations) {
            EXPECT_LT(unitarity_defect(cfg.unitary), 1e-12);
            if (cfg.kind == ConfigurationKind::kToggled) {
                EXPECT_EQ(std::count(cfg.theta.begin(), cfg.theta.end(), 1), static_cast<long>(d2 / 2));
            }
        }
        std::map<std::pair<std::size_t, std::size_t>, std::pair<int, int>> seen;
        for (const auto& r : plan.readouts) {
            if (r.a == r.b) continue;
            auto key = std::minmax(r.a, r.b);
            seen[key].first += r.re_coeff != 0;
            seen[key].second += r.im_coeff != 0;
        }
        EXPECT_EQ(seen.size(), d2 * (d2 - 1) / 2);
        for (const auto& [pair, cover] : seen) {
            EXPECT_GE(cover.first, 1);
            EXPECT_GE(cover.second, 1);
        }
    }
}

TEST(FormulaSimulation, AgreeForEveryConfigurationAndSyndrome) {
    for (const char* name : {"code3", "code5"}) {
        StabilizerCode code = builtin_code(name);
        Plan plan = plan_configurations(code);
        auto beta = random_beta(code.k(), 42);
        for (const auto& ch : channels_for(code)) {
            ProcessMatrix chi = oracle_chi(code, ch);
            auto records = simulate_plan(code, beta, ch, plan);
            for (std::size_t c = 0; c < plan.configurations.size(); ++c) {
                for (std::size_t x = 0; x < code.error_basis().size(); ++x) {
                    EXPECT_NEAR(records[c].probabilities[x], xi_predicted(chi, code, plan.configurations[c], x), 1e-10)
                        << name << " " << ch.label() << " cfg " << c << " x " << x;
                }
            }
        }
    }
}

TEST(FormulaSimulation, GeneralPairsAgree) {
    StabilizerCode code = builtin_code("code3");
    auto beta = uniform_beta(code);
    Channel ch = builtin("random-cp", {77});
    ProcessMatrix chi = oracle_chi(code, ch);
    std::vector<int> theta{1, -1, -1, 1};
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            if (a == b) continue;
            for (const auto& cfg : {rotated_configuration(code, a, b), toggled_configuration(code, a, b, theta)}) {
                auto rec = xi_simulated(code, beta, ch, cfg);
                for (std::size_t x = 0; x < 4; ++x) {
                    EXPECT_NEAR(rec.probabilities[x], xi_predicted(chi, code, cfg, x), 1e-10);
                }
            }
        }
    }
}

TEST(EncodedStateIndependence, DistributionsDoNotDependOnBeta) {
    for (const char* name : {"code3", "code5"}) {
        StabilizerCode code = builtin_code(name);
        Plan plan = plan_configurations(code);
        Channel ch = channels_for(code).back();
        auto reference = simulate_plan(code, uniform_beta(code), ch, plan);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto records = simulate_plan(code, random_beta(code.k(), seed), ch, plan);
            for (std::size_t c = 0; c < records.size(); ++c) {
                for (std::size_t x = 0; x < records[c].size(); ++x) {
                    EXPECT_NEAR(records[c].probabilities[x], reference[c].probabilities[x], 1e-10);
                }
            }
        }
    }
}

TEST(Reconstruct, Examples) {
    StabilizerCode three = builtin_code("code3");
    Plan plan = plan_configurations(three);
    auto beta = uniform_beta(three);

    auto id_records = simulate_plan(three, beta, builtin("identity", {}), plan);
    Reconstruction id = reconstruct(three, plan, id_records);
    Matrix e00 = Matrix::Zero(4, 4);
    e00(0, 0) = 1;
    EXPECT_LT((id.chi.matrix() - e00).norm(), 1e-10);

    Channel ad = builtin("amplitude-damping", {0.36});
    Reconstruction r = reconstruct(three, plan, simulate_plan(three, beta, ad, plan));
    EXPECT_LT((r.chi.matrix() - oracle_chi(three, ad).matrix()).norm(), 1e-10);
    EXPECT_NEAR(std::abs(r.chi.at("I", "Z") - 0.09), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(r.chi.at("X", "Y") - Complex(0, -0.09)), 0.0, 1e-10);
    for (double res : r.residuals) EXPECT_LT(res, 1e-10);
    EXPECT_LT(r.max_readout_spread, 1e-10);

    StabilizerCode five = builtin_code("code5");
    Plan plan5 = plan_configurations(five);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        Channel ch = random_cp_channel(seed, 2, 16);
        Reconstruction r5 = reconstruct(five, plan5, simulate_plan(five, uniform_beta(five), ch, plan5));
        EXPECT_LT((r5.chi.matrix() - oracle_chi(five, ch).matrix()).norm(), 1e-8);
    }
}

TEST(Reconstruct, ExactOnStandardChannels) {
    for (const char* name : {"code3", "code5"}) {
        StabilizerCode code = builtin_code(name);
        Plan plan = plan_configurations(code);
        for (const auto& ch : channels_for(code)) {
            Reconstruction r = reconstruct(code, plan, simulate_plan(code, uniform_beta(code), ch, plan));
            EXPECT_LT((r.chi.matrix() - oracle_chi(code, ch).matrix()).norm(), 1e-9) << ch.label();
            EXPECT_TRUE(r.validity.hermitian);
        }
    }
}

TEST(Reconstruct, TraceDecreasingChannelKeepsItsTrace) {
    StabilizerCode code = builtin_code("code3");
    Plan plan = plan_configurations(code);
    Channel lossy(1, {0.8 * oracle::amplitude_damping(0.5)[0], 0.8 * oracle::amplitude_damping(0.5)[1]});
    auto records = simulate_plan(code, uniform_beta(code), lossy, plan);
    double total = 0;
    for (double p : records[0].probabilities) total += p;
    EXPECT_NEAR(total, 0.64, 1e-12);
    Reconstruction r = reconstruct(code, plan, records);
    EXPECT_NEAR(r.validity.trace, 0.64, 1e-10);
    EXPECT_LT((r.chi.matrix() - oracle_chi(code, lossy).matrix()).norm(), 1e-10);
}

TEST(Reconstruct, RejectsIncompleteOrInconsistentRecords) {
    StabilizerCode code = builtin_code("code3");
    Plan plan = plan_configurations(code);
    auto records = simulate_plan(code, uniform_beta(code), builtin("amplitude-damping", {0.2}), plan);
    auto missing = records;
    missing.pop_back();
    EXPECT_THROW(reconstruct(code, plan, missing), ReconstructionError);
    auto tampered = records;
    tampered[1].probabilities[0] += 0.05;
    EXPECT_THROW(reconstruct(code, plan, tampered), ReconstructionError);
}

TEST(CheckSupport, RejectsMismatchedChannels) {
    StabilizerCode three = builtin_code("code3");
    EXPECT_THROW(check_support(three, builtin("correlated-flip", {0.3})), SupportError);
    EXPECT_NO_THROW(check_support(three, builtin("amplitude-damping", {0.3})));
    std::vector<Complex> beta = uniform_beta(three);
    EXPECT_THROW(xi_simulated(three, beta, builtin("correlated-flip", {0.3}), bare_configuration(three)),
                 SupportError);
}

TEST(Recover, Examples) {
    StabilizerCode code = builtin_code("code3");
    StateVector psi = encode(code, random_beta(1, 8));
    EXPECT_NEAR(fidelity(recover(psi, code, code.syndrome(0)), psi), 1.0, 1e-12);

    std::size_t x1 = idx(code, "X");
    StateVector hit(to_matrix(code.error_basis().element(x1)) * psi.amplitudes());
    EXPECT_GT(fidelity(recover(hit, code, code.syndrome(x1)), psi), 1 - 1e-10);
}

TEST(Recover, AfterRotatedPreprocessing) {
    for (const char* name : {"code3", "code5"}) {
        StabilizerCode code = builtin_code(name);
        Plan plan = plan_configurations(code);
        StateVector psi = encode(code, random_beta(code.k(), 5));
        const ErrorBasis& basis = code.error_basis();
        for (std::size_t e = 0; e < basis.size(); ++e) {
            DensityMatrix hit = outer(StateVector(to_matrix(basis.element(e)) * psi.amplitudes()));
            for (const auto& cfg : plan.configurations) {
                DensityMatrix rotated = apply_unitary(hit, cfg.unitary);
                MeasurementRecord rec = measure(code, rotated, cfg, 0);
                for (std::size_t x = 0; x < basis.size(); ++x) {
                    if (rec.probabilities[x] < 1e-9) continue;
                    DensityMatrix post = collapse(code, rotated, x);
                    DensityMatrix fixed = recover(post, code, code.syndrome(x));
                    EXPECT_GT(fidelity(psi, fixed), 1 - 1e-10) << name << " e=" << e << " x=" << x;
                }
            }
        }
    }
}

TEST(Collapse, RejectsImpossibleOutcome) {
    StabilizerCode code = builtin_code("code3");
    DensityMatrix rho = outer(encode(code, uniform_beta(code)));
    EXPECT_THROW(collapse(code, rho, 1), ValidationError);
}

}  // namespace
}  // namespace qeccd
