#include <gtest/gtest.h>

#include "generators.hpp"
#include "tukey/adversary.hpp"
#include "tukey/process.hpp"

namespace tukey::adversary {
namespace {

constexpr Nat kBudget = 1000000;

AdversaryCertificate identity_cert(Nat depth) {
  IdentityMachine id;
  auto out = build_adversary(id, depth, kBudget);
  EXPECT_EQ(out.status, Status::complete);
  return out.certificate;
}

Bits random_bits(testing::Gen& g, Nat n) {
  Bits b;
  for (Nat i = 0; i < n; ++i) b.push_back(g.coin());
  return b;
}

void check_shape(const AdversaryCertificate& cert) {
  const auto& p = cert.theta.partition;
  ASSERT_EQ(p.depth(), cert.depth());
  ASSERT_EQ(cert.theta.table.size(), cert.depth());
  EXPECT_EQ(p.cuts[0], 0u);
  for (Nat k = 0; k < cert.depth(); ++k) {
    EXPECT_GT(p.length(k), 0u);
    EXPECT_EQ(cert.theta.table[k].size(), Nat{1} << p.cuts[k]);
    for (const auto& [s, t] : cert.theta.table[k]) {
      EXPECT_EQ(s.size(), p.cuts[k]);
      EXPECT_EQ(t.size(), p.length(k));
    }
    if (k > 0) {
      EXPECT_LT(cert.pivots[k - 1], cert.pivots[k]);
    }
  }
}

TEST(Bits, RoundTrip) {
  EXPECT_EQ(bits_str({}), "ε");
  EXPECT_EQ(bits_str(parse_bits("0110")), "0110");
  EXPECT_TRUE(parse_bits("ε").empty());
  EXPECT_THROW(parse_bits("012"), ContractError);
}

TEST(Predicts, GreedyCopyAndSingleFlip) {
  auto cert = identity_cert(5);
  const auto& theta = cert.theta;
  Bits c;
  for (Nat k = 0; k < cert.depth(); ++k) {
    const auto& t = theta.table[k].at(c);
    c.insert(c.end(), t.begin(), t.end());
  }
  for (Nat k = 0; k < cert.depth(); ++k) EXPECT_TRUE(predicts(theta, c, k));
  for (Nat k = 0; k < cert.depth(); ++k) {
    // flipping a bit of I_k breaks level k only among levels <= k
    Bits d = c;
    const Nat x = theta.partition.start(k);
    d[x] = !d[x];
    EXPECT_FALSE(predicts(theta, d, k));
    for (Nat j = 0; j < k; ++j) EXPECT_TRUE(predicts(theta, d, j));
  }
  EXPECT_THROW(predicts(theta, c, 5), ContractError);
  EXPECT_THROW(predicts(theta, Bits(2), 3), ContractError);
}

TEST(Predicts, RandomTableAgainstLookup) {
  testing::Gen g(41);
  for (int trial = 0; trial < 20; ++trial) {
    Predictor theta;
    theta.partition.cuts = {0, 3, 6, 9};
    for (Nat k = 0; k < 3; ++k) {
      std::map<Bits, Bits> level;
      for (Nat v = 0; v < (Nat{1} << (3 * k)); ++v) level.emplace(detail::bits_of(v, 3 * k), random_bits(g, 3));
      theta.table.push_back(level);
    }
    for (int probe = 0; probe < 50; ++probe) {
      const Bits c = random_bits(g, 9);
      for (Nat k = 0; k < 3; ++k) {
        const Bits s(c.begin(), c.begin() + 3 * k), t(c.begin() + 3 * k, c.begin() + 3 * k + 3);
        ASSERT_EQ(predicts(theta, c, k), theta.table[k][s] == t);
      }
    }
  }
}

TEST(Predicts, UPSetArgument) {
  auto cert = identity_cert(4);
  // identity: θ(s) = 1 at every level, so the all-ones set is predicted
  for (Nat k = 0; k < 4; ++k) {
    EXPECT_TRUE(predicts(cert.theta, UPSet::all(), k));
    EXPECT_FALSE(predicts(cert.theta, UPSet::empty(), k));
  }
}

TEST(BuildAdversary, IdentityDepthFive) {
  IdentityMachine id;
  auto out = build_adversary(id, 5, kBudget);
  ASSERT_EQ(out.status, Status::complete);
  EXPECT_FALSE(out.frontier);
  EXPECT_LT(out.queries, kBudget);
  const auto& cert = out.certificate;
  check_shape(cert);
  EXPECT_EQ(cert.depth(), 5u);
  for (Nat k = 0; k < 5; ++k) {
    // the pivot lies inside I_k and θ forces it to 1
    EXPECT_GE(cert.pivots[k], cert.theta.partition.start(k));
    EXPECT_LT(cert.pivots[k], cert.theta.partition.cuts[k + 1]);
  }
  for (const auto& f : cert.facts) {
    const Bits c = detail::concat(f.s, f.theta);
    EXPECT_TRUE(c[f.pivot]);
  }
  EXPECT_EQ(cert.facts.size(), 1u + 2 + 4 + 8 + 16);
  EXPECT_TRUE(disputed_facts(cert, id).empty());
}

TEST(BuildAdversary, ConstantOnes) {
  ConstantMachine ones(true);
  auto out = build_adversary(ones, 5, kBudget);
  ASSERT_EQ(out.status, Status::complete);
  check_shape(out.certificate);
  for (Nat k = 0; k < 5; ++k) {
    EXPECT_EQ(out.certificate.theta.partition.length(k), 1u);
    EXPECT_EQ(out.certificate.pivots[k], k);
  }
}

TEST(BuildAdversary, ConstantZerosExhaustsBudget) {
  ConstantMachine zeros(false);
  auto out = build_adversary(zeros, 3, 5000);
  EXPECT_EQ(out.status, Status::budget_exhausted);
  EXPECT_EQ(out.queries, 5000u);
  ASSERT_TRUE(out.frontier);
  EXPECT_EQ(out.frontier->level, 0u);
  EXPECT_EQ(out.frontier->unresolved, std::vector<Bits>{Bits{}});
  EXPECT_EQ(out.certificate.depth(), 0u);
}

TEST(BuildAdversary, PartialCertificateOnBudget) {
  IdentityMachine id;
  const auto full = build_adversary(id, 5, kBudget);
  auto part = build_adversary(id, 5, full.queries / 3);
  EXPECT_EQ(part.status, Status::budget_exhausted);
  ASSERT_TRUE(part.frontier);
  EXPECT_EQ(part.certificate.depth(), part.frontier->level);
  EXPECT_GT(part.certificate.depth(), 0u);
  check_shape(part.certificate);
  for (Nat k = 0; k < part.certificate.depth(); ++k) EXPECT_EQ(part.certificate.pivots[k], full.certificate.pivots[k]);
}

TEST(BuildAdversary, MonotonicityFault) {
  FunctionMachine flaky("flaky", [](const Bits& p, Nat) { return p.size() % 2 ? Answer::one : Answer::zero; });
  auto out = build_adversary(flaky, 3, kBudget);
  EXPECT_EQ(out.status, Status::fault);
  EXPECT_NE(out.fault.find("changed"), std::string::npos);
}

TEST(BuildAdversary, DelayedDecisions) {
  // ψ(c)(m) = c(m), known only once m+2 bits are read
  FunctionMachine slow("slow", [](const Bits& p, Nat m) {
    if (p.size() < m + 2) return Answer::undecided;
    return p[m] ? Answer::one : Answer::zero;
  });
  auto out = build_adversary(slow, 4, kBudget);
  ASSERT_EQ(out.status, Status::complete);
  check_shape(out.certificate);
  EXPECT_TRUE(disputed_facts(out.certificate, slow).empty());
  EXPECT_GT(out.certificate.theta.partition.length(3), 1u);
}

TEST(BuildAdversary, DenseOpenHook) {
  struct Hooked : IdentityMachine {
    Bits dense_extension(const Bits&) override { return {false, true}; }
  } hooked;
  auto out = build_adversary(hooked, 3, kBudget);
  ASSERT_EQ(out.status, Status::complete);
  for (const auto& f : out.certificate.facts) {
    ASSERT_GE(f.theta.size(), 2u);
    EXPECT_FALSE(f.theta[0]);
    EXPECT_TRUE(f.theta[1]);
  }
  EXPECT_TRUE(disputed_facts(out.certificate, hooked).empty());
}

TEST(BuildAdversary, RandomMonotoneMachinesYieldSoundCertificates) {
  testing::Gen g(42);
  for (int trial = 0; trial < 30; ++trial) {
    // ψ(c)(m) = OR of c over a window [w*m, w*m + w) shifted by d
    const Nat w = g.nat(1, 3), d = g.nat(0, 3);
    FunctionMachine window("window", [w, d](const Bits& p, Nat m) {
      const Nat lo = w * m + d, hi = lo + w;
      bool any = false;
      for (Nat x = lo; x < hi && x < p.size(); ++x) any = any || p[x];
      if (any) return Answer::one;
      return p.size() >= hi ? Answer::zero : Answer::undecided;
    });
    auto out = build_adversary(window, 4, kBudget);
    ASSERT_EQ(out.status, Status::complete);
    check_shape(out.certificate);
    ASSERT_TRUE(disputed_facts(out.certificate, window).empty());
    for (Nat r = 0; r < 2; ++r) {
      auto c = predicted_family_element(out.certificate, 2, r, g.coin());
      EXPECT_EQ(image_nonsplit_certificate(out.certificate, window, c, 2, r).size(), 2u);
    }
  }
}

TEST(PredictedFamily, EvenClassAllOnes) {
  auto cert = identity_cert(5);
  auto c = predicted_family_element(cert, 2, 0, true);
  const auto& p = cert.theta.partition;
  ASSERT_EQ(c.size(), p.cuts.back());
  for (Nat k = 0; k < 5; ++k) {
    if (k % 2 == 0) {
      EXPECT_TRUE(predicts(cert.theta, c, k));
    } else {
      for (Nat x = p.start(k); x < p.cuts[k + 1]; ++x) EXPECT_TRUE(c[x]);
    }
  }
}

TEST(PredictedFamily, ArbitraryFreeBitsStayPredicted) {
  testing::Gen g(43);
  FunctionMachine slow("slow", [](const Bits& p, Nat m) {
    if (p.size() < m + 2) return Answer::undecided;
    return p[m] ? Answer::one : Answer::zero;
  });
  auto cert = build_adversary(slow, 5, kBudget).certificate;
  for (Nat n = 1; n <= 3; ++n)
    for (Nat r = 0; r < n; ++r)
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Bits> free(5);
        for (Nat k = 0; k < 5; ++k)
          if (k % n != r) free[k] = random_bits(g, cert.theta.partition.length(k));
        auto c = predicted_family_element(cert, n, r, free);
        for (Nat k = 0; k < 5; ++k) {
          if (k % n == r) {
            ASSERT_TRUE(predicts(cert.theta, c, k));
          } else {
            ASSERT_EQ(Bits(c.begin() + cert.theta.partition.start(k), c.begin() + cert.theta.partition.cuts[k + 1]),
                      free[k]);
          }
        }
      }
}

TEST(PredictedFamily, ShapeErrors) {
  auto cert = identity_cert(3);
  EXPECT_THROW(predicted_family_element(cert, 2, 2, true), ContractError);
  EXPECT_THROW(predicted_family_element(cert, 0, 0, true), ContractError);
  EXPECT_THROW(predicted_family_element(cert, 2, 0, std::vector<Bits>(2)), ContractError);
  EXPECT_THROW(predicted_family_element(cert, 2, 0, std::vector<Bits>{{}, {true, true}, {}}), ContractError);
  EXPECT_THROW(predicted_family_element(cert, 2, 0, std::vector<Bits>{{true}, {true}, {}}), ContractError);
}

// both values are taken on the target's points in [0, c.size())
std::pair<Nat, Nat> trace_counts(const Bits& c, const UPSet& target, const std::vector<Nat>& region) {
  Nat ones = 0, zeros = 0;
  for (Nat x : region)
    if (target.contains(x)) (c[x] ? ones : zeros) += 1;
  return {ones, zeros};
}

TEST(Splitter, Examples) {
  auto cert = identity_cert(5);
  auto all = splitter_from_free_class(cert, 2, 0, UPSet::all());
  EXPECT_EQ(all.points, free_positions(cert, 2, 0));
  EXPECT_GE(all.ones, 1u);
  EXPECT_GE(all.zeros, 1u);

  // singleton intervals: the even positions are exactly the predicted levels of class 0
  EXPECT_THROW(splitter_from_free_class(cert, 2, 0, UPSet::evens()), ContractError);

  auto deep = identity_cert(8);
  auto sp = splitter_from_free_class(deep, 2, 1, UPSet::evens());
  EXPECT_GE(sp.ones, 2u);
  EXPECT_GE(sp.zeros, 2u);
  const auto [ones, zeros] = trace_counts(sp.c, UPSet::evens(), free_positions(deep, 2, 1));
  EXPECT_EQ(ones, sp.ones);
  EXPECT_EQ(zeros, sp.zeros);
  for (Nat k = 1; k < 8; k += 2) EXPECT_TRUE(predicts(deep.theta, sp.c, k));
}

TEST(ImageNonsplit, IdentityAndConstant) {
  IdentityMachine id;
  auto cert = identity_cert(5);
  for (Nat r = 0; r < 2; ++r) {
    auto facts = image_nonsplit_certificate(cert, id, predicted_family_element(cert, 2, r, false), 2, r);
    ASSERT_EQ(facts.size(), r == 0 ? 3u : 2u);
    for (const auto& f : facts) EXPECT_EQ(f.answer, Answer::one);
  }
  ConstantMachine ones(true);
  auto ones_cert = build_adversary(ones, 4, kBudget).certificate;
  EXPECT_EQ(image_nonsplit_certificate(ones_cert, ones, predicted_family_element(ones_cert, 2, 1, false), 2, 1).size(),
            2u);
  EXPECT_THROW(image_nonsplit_certificate(cert, id, Bits(5, false), 2, 0), ContractError);
}

TEST(ImageNonsplit, TamperedCertificateIsCaught) {
  IdentityMachine id;
  auto cert = identity_cert(5);
  auto tampered = cert;
  for (auto& [s, t] : tampered.theta.table[2]) t[0] = false;
  for (auto& f : tampered.facts)
    if (f.level == 2) f.theta[0] = false;
  EXPECT_EQ(disputed_facts(tampered, id).size(), 4u);
  auto c = predicted_family_element(tampered, 2, 0, true);
  EXPECT_THROW(image_nonsplit_certificate(tampered, id, c, 2, 0), MachineFault);
}

TEST(Multiclass, Examples) {
  IdentityMachine id;
  auto cert = identity_cert(5);
  auto empty = multiclass_family(cert, id, {});
  EXPECT_TRUE(empty.classes.empty());
  EXPECT_TRUE(empty.targets.empty());

  auto two = multiclass_family(cert, id, {{2, 0}, {2, 1}}, {UPSet::all(), UPSet::evens(), UPSet::odds()});
  ASSERT_EQ(two.classes.size(), 2u);
  ASSERT_EQ(two.targets.size(), 3u);
  for (const auto& t : two.targets) EXPECT_TRUE(t.split) << t.target.str();
  EXPECT_EQ(two.targets[1].split->first, 1u);  // evens lie in the free region of class 1
  EXPECT_EQ(two.targets[2].split->first, 0u);

  auto deep = identity_cert(7);
  std::vector<std::pair<Nat, Nat>> specs;
  for (Nat n = 1; n <= 3; ++n)
    for (Nat r = 0; r < n; ++r) specs.emplace_back(n, r);
  auto cor = multiclass_family(deep, id, specs, {UPSet::all()});
  EXPECT_EQ(cor.classes.size(), 6u);
  for (const auto& c : cor.classes) {
    for (const auto& f : c.pivots) EXPECT_EQ(f.answer, Answer::one);
    EXPECT_EQ(c.pivots.size(), (7 - c.r + c.n - 1) / c.n);
  }
  ASSERT_EQ(cor.targets.size(), 3u);
  EXPECT_FALSE(cor.targets[0].split);  // n = 1 has no free region
  EXPECT_TRUE(cor.targets[1].split);
  EXPECT_TRUE(cor.targets[2].split);
}

TEST(Multiclass, EvenAndOddClassesSplitSampledTargets) {
  testing::Gen g(44);
  IdentityMachine id;
  auto cert = identity_cert(5);
  const auto even_free = free_positions(cert, 2, 0), odd_free = free_positions(cert, 2, 1);
  int sampled = 0;
  while (sampled < 20) {
    const UPSet t = g.infinite_upset(4, 4);
    auto meets = [&](const std::vector<Nat>& region) {
      return std::count_if(region.begin(), region.end(), [&](Nat x) { return t.contains(x); }) >= 2;
    };
    if (!meets(even_free) && !meets(odd_free)) continue;
    ++sampled;
    auto report = multiclass_family(cert, id, {{2, 0}, {2, 1}}, {t});
    ASSERT_TRUE(report.targets[0].split) << t.str();
    const auto& [r, sp] = *report.targets[0].split;
    const auto [ones, zeros] = trace_counts(sp.c, t, r == 0 ? even_free : odd_free);
    EXPECT_GE(ones, 1u);
    EXPECT_GE(zeros, 1u);
    for (const auto& f : image_nonsplit_certificate(cert, id, sp.c, 2, r)) EXPECT_EQ(f.answer, Answer::one);
  }
}

// ---------------------------------------------------------------------------
// External processes

const char* kShellIdentity =
    "while read q p m; do if [ \"$p\" = \"ε\" ] || [ ${#p} -le \"$m\" ]; then echo U; "
    "else echo \"$p\" | cut -c$((m + 1)); fi; done";

TEST(ProcessMachine, MatchesInProcessIdentity) {
  process::ProcessMachine ext(kShellIdentity);
  EXPECT_EQ(ext.query(parse_bits("0110"), 1), Answer::one);
  EXPECT_EQ(ext.query(parse_bits("0110"), 0), Answer::zero);
  EXPECT_EQ(ext.query({}, 0), Answer::undecided);
  auto out = build_adversary(ext, 3, kBudget);
  ASSERT_EQ(out.status, Status::complete);
  auto local = identity_cert(3);
  EXPECT_EQ(out.certificate.pivots, local.pivots);
  EXPECT_EQ(out.certificate.theta.partition.cuts, local.theta.partition.cuts);
}

TEST(ProcessMachine, Faults) {
  process::ProcessMachine silent("sleep 5", 200);
  EXPECT_THROW(silent.query({}, 0), BudgetExhausted);
  process::ProcessMachine chatty("while read l; do echo maybe; done");
  EXPECT_THROW(chatty.query({}, 0), MachineFault);
  process::ProcessMachine dead("true");
  EXPECT_THROW(dead.query({}, 0), MachineFault);
}

TEST(ProcessMap, CatIsTheIdentity) {
  process::ProcessMap cat("cat", Kind::set());
  EXPECT_EQ(cat(UPSet::evens()), Value(UPSet::evens()));
  process::ProcessMap wrong("while read l; do echo 7; done", Kind::set());
  EXPECT_THROW(wrong(UPSet::evens()), ContractError);
}

}  // namespace
}  // namespace tukey::adversary
