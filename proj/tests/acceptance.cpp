// Acceptance suite: one PASS/FAIL line per criterion, exact rational checks
// throughout (no tolerances). Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "emu/emu.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace {

using namespace emu;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Vec negated(Vec v) {
  for (auto& x : v) x = -x;
  return v;
}

// 1. Bipolar identity on random cones, and C = D' <=> D = C' on random pairs.
Outcome bipolar() {
  Outcome o;
  Rng rng(1001);
  for (int k = 0; k < 200; ++k) {
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    const auto count = static_cast<std::size_t>(uniform_int(rng, 0, 6));
    const auto c = cone_from_generators(dim, gen::int_vectors(count, dim, -5, 5, rng));
    o.require(cone_equal(dual_cone(dual_cone(c)), c), "C'' != C for cone #" + std::to_string(k));
  }
  int dual_pairs = 0;
  for (int k = 0; k < 100; ++k) {
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const auto c = cone_from_generators(
        dim, gen::int_vectors(static_cast<std::size_t>(uniform_int(rng, 0, 6)), dim, -5, 5, rng));
    PolyhedralCone d = c;
    if (k % 2 == 0) {
      // Rebuild C' from a rescaled, reordered copy of its generators.
      const auto cd = dual_cone(c);
      std::vector<Vec> gens;
      for (const auto& g : cd.generators()) {
        Vec v = to_rational(g);
        const Rational scale = uniform_int(rng, 1, 3);
        for (auto& x : v) x *= scale;
        gens.insert(gens.begin(), v);
      }
      for (const auto& l : cd.lineality()) {
        gens.push_back(to_rational(l));
        gens.push_back(negated(to_rational(l)));
      }
      d = cone_from_generators(dim, gens);
    } else {
      d = cone_from_generators(
          dim, gen::int_vectors(static_cast<std::size_t>(uniform_int(rng, 0, 6)), dim, -5, 5, rng));
    }
    const bool lhs = cone_equal(c, dual_cone(d));
    const bool rhs = cone_equal(d, dual_cone(c));
    o.require(lhs == rhs, "duality biconditional fails on pair #" + std::to_string(k));
    if (lhs && rhs) ++dual_pairs;
  }
  o.require(dual_pairs >= 50, "only " + std::to_string(dual_pairs) + " dual pairs exercised");
  if (o.pass) o.detail = "200 cones, 100 pairs (" + std::to_string(dual_pairs) + " dual)";
  return o;
}

// 2. LP membership against basic-feasible-solution enumeration.
Outcome oracle_equivalence() {
  Outcome o;
  Rng rng(2002);
  int ins = 0;
  for (int k = 0; k < 500; ++k) {
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const auto count = static_cast<std::size_t>(uniform_int(rng, 0, 6));
    const auto raw = gen::int_vectors(count, dim, -5, 5, rng);
    Vec x(dim);
    if (k % 2 == 0 && !raw.empty()) {
      for (const auto& g : raw) {
        const Rational w = frac(uniform_int(rng, 0, 4), static_cast<unsigned long>(uniform_int(rng, 1, 3)));
        for (std::size_t i = 0; i < dim; ++i) x[i] += w * g[i];
      }
    } else {
      x = gen::int_vec(dim, -5, 5, rng);
    }
    const auto c = cone_from_generators(dim, raw);
    const auto cert = membership(c, x);
    const bool lp_in = cert.verdict == Verdict::in;
    o.require(lp_in == oracle::bfs_membership(raw, x), "verdict mismatch on query #" + std::to_string(k));
    o.require(verify_certificate(c, x, cert), "certificate fails on query #" + std::to_string(k));
    if (lp_in) ++ins;
  }
  if (o.pass) o.detail = "500 queries (" + std::to_string(ins) + " IN)";
  return o;
}

std::vector<PreferenceDataset> datasets(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PreferenceDataset> out;
  for (std::size_t k = 0; k < count; ++k) {
    const auto space = gen::space(static_cast<std::size_t>(uniform_int(rng, 2, 5)));
    out.push_back(gen::dataset(space, static_cast<std::size_t>(uniform_int(rng, 0, 6)), rng));
  }
  return out;
}

// 3. Cone-membership verdicts equal the all-utilities test.
Outcome round_trip(const std::vector<PreferenceDataset>& sets) {
  Outcome o;
  Rng rng(3003);
  std::size_t comparable = 0;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto& d = sets[k];
    const auto rep = extract_representation(d, d.space->labels().back());
    for (int j = 0; j < 50; ++j) {
      Lottery p = random_lottery(d.space, 6, rng);
      Lottery q = random_lottery(d.space, 6, rng);
      if (j % 2 == 0 && !d.statements.empty()) {
        // Mixtures of a data statement give pairs that are actually ranked.
        const auto& s = d.statements[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(d.statements.size()) - 1))];
        const Rational alpha = frac(uniform_int(rng, 1, 6), 6);
        const Lottery r = p;
        p = mix(alpha, s.p, r);
        q = mix(alpha, s.q, r);
      }
      const auto v = query(rep, p, q);
      o.require(v.classification == classify_by_utilities(rep, p, q),
                "verdicts differ on dataset #" + std::to_string(k));
      if (v.classification != Classification::incomparable) ++comparable;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(sets.size()) + " datasets x 50 queries (" + std::to_string(comparable) +
               " comparable)";
  }
  return o;
}

// 4. Different pins give the same canonical cone.
Outcome uniqueness(const std::vector<PreferenceDataset>& sets) {
  Outcome o;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto& d = sets[k];
    const auto first = extract_representation(d, d.space->labels().front());
    const auto last = extract_representation(d, d.space->labels().back());
    o.require(check_uniqueness(first.utilities, last.utilities),
              "pins disagree on dataset #" + std::to_string(k));
  }
  if (o.pass) o.detail = std::to_string(sets.size()) + " datasets";
  return o;
}

// 5. {e_a >= e_b, e_b >= e_c} entails e_a >= e_c with weights (1, 1).
Outcome transitivity_chain() {
  Outcome o;
  const auto s = OutcomeSpace::create({"a", "b", "c"});
  auto e = [&](const char* z) { return Lottery::point_mass(s, z); };
  const PreferenceDataset d{s, {{e("a"), e("b")}, {e("b"), e("c")}}};
  const auto rep = extract_representation(d, "c");
  const auto v = query(rep, e("a"), e("c"));
  o.require(v.classification == Classification::entailed_only, "e_a vs e_c not ENTAILED_ONLY");
  o.require(v.forward.verdict == Verdict::in && v.forward.combination.size() == 2 &&
                v.forward.combination[0].second == 1 && v.forward.combination[1].second == 1,
            "certificate weights are not (1, 1)");
  o.require(verify_certificate(rep.cone, {1, 0, -1}, v.forward), "certificate does not recombine");
  o.require(query(rep, e("c"), e("a")).classification == Classification::reverse_only,
            "e_c vs e_a not REVERSE_ONLY");
  if (o.pass) o.detail = "lambda = (1, 1)";
  return o;
}

// 6. Monotone structures force increasing utilities.
Outcome monotone() {
  Outcome o;
  Rng rng(6006);
  std::size_t checked = 0;
  for (int k = 0; k < 50; ++k) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 5));
    const auto space = gen::space(n);
    // Random pairs oriented along a random ranking, so the relation is acyclic.
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = i;
    for (std::size_t i = n; i > 1; --i) {
      std::swap(rank[i - 1], rank[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1))]);
    }
    MonotoneStructure m;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (uniform_int(rng, 0, 2) == 0) {
          m.relation.emplace_back(space->label(rank[i]), space->label(rank[j]));
        }
      }
    }
    const auto d = monotone_extend(gen::dataset(space, static_cast<std::size_t>(uniform_int(rng, 0, 4)), rng), m);
    const auto rep = extract_representation(d, space->labels().back());
    for (const auto& u : rep.utilities) {
      o.require(check_increasing(u, m), "non-increasing utility in case #" + std::to_string(k));
      ++checked;
    }
  }
  if (o.pass) o.detail = "50 orders, " + std::to_string(checked) + " utilities";
  return o;
}

// 7. Orthogonal decomposition against the positive/negative-part oracle.
Outcome decomposition() {
  Outcome o;
  Rng rng(7007);
  for (int k = 0; k < 500; ++k) {
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 2, 6));
    const auto space = gen::space(dim);
    const Vec raw = k % 50 == 0 ? Vec(dim) : gen::zero_sum(dim, rng);
    const Measure x = Measure::from_dense(space, raw);
    const auto d = decompose(x);
    o.require(d.alpha * (d.plus.measure() - d.minus.measure()) == x, "reconstruction #" + std::to_string(k));
    for (auto i : d.plus.measure().support()) {
      o.require(d.minus.measure().support().count(i) == 0, "overlap #" + std::to_string(k));
    }
    const auto [pos, neg] = oracle::pos_neg(raw);
    Rational alpha = 0;
    for (const auto& v : pos) alpha += v;
    if (sgn(alpha) == 0) {
      o.require(d.alpha == 0 && d.plus == Lottery::point_mass(space, std::size_t{0}) &&
                    d.minus == Lottery::point_mass(space, std::size_t{1}),
                "zero convention #" + std::to_string(k));
      continue;
    }
    Vec p = pos, q = neg;
    for (auto& v : p) v /= alpha;
    for (auto& v : q) v /= alpha;
    o.require(d.alpha == alpha && d.plus.measure().dense() == p && d.minus.measure().dense() == q,
              "differs from oracle #" + std::to_string(k));
  }
  if (o.pass) o.detail = "500 vectors";
  return o;
}

// 8. Truncation lab.
Outcome truncation_lab() {
  Outcome o;
  for (long k0 = 1; k0 <= 20; ++k0) {
    o.require(sgn(lab::inequality_chain(k0, k0 + 2)) < 0, "chain not negative at k0=" + std::to_string(k0));
  }
  Rational previous = -1;
  double seconds_at_8 = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto t = lab::build_truncation(n);
    const auto cert = lab::anchor_membership(t);
    const auto sep = lab::separate(t);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (n == 8) seconds_at_8 = secs;
    o.require(t.generators.size() == (std::size_t{1} << n) - 1, "generator count at n=" + std::to_string(n));
    o.require(cert.verdict == Verdict::out, "anchor IN at n=" + std::to_string(n));
    o.require(lab::verify_anchor_certificate(t, cert), "anchor certificate at n=" + std::to_string(n));
    o.require(lab::verify_separation(t, sep), "separation certificate at n=" + std::to_string(n));
    if (n >= 2) {
      o.require(sep.cost > Rational(static_cast<long>(n) - 2), "cost bound at n=" + std::to_string(n));
    }
    o.require(sep.cost >= previous, "cost decreases at n=" + std::to_string(n));
    previous = sep.cost;
  }
  o.require(seconds_at_8 < 60.0, "n=8 took too long");
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "n=8: 255 generators, dim 18, cost %s, %.2fs", to_string(previous).c_str(),
                  seconds_at_8);
    o.detail = buf;
  }
  return o;
}

// 9. Mixture self-test.
Outcome independence() {
  Outcome o;
  const auto sets = datasets(100, 9009);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    o.require(check_independence_closure(sets[k], 100, 9000 + k), "self-test fails on dataset #" + std::to_string(k));
  }
  if (o.pass) o.detail = "100 datasets x 100 samples";
  return o;
}

}  // namespace

int main() {
  const auto shared = datasets(100, 3000);
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 bipolar identity and duality biconditional", bipolar},
      {"2 membership vs basic-solution oracle", oracle_equivalence},
      {"3 representation round trip", [&] { return round_trip(shared); }},
      {"4 uniqueness across pins", [&] { return uniqueness(shared); }},
      {"5 transitivity chain", transitivity_chain},
      {"6 monotone utilities", monotone},
      {"7 orthogonal decomposition", decomposition},
      {"8 truncation lab", truncation_lab},
      {"9 independence self-test", independence},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
