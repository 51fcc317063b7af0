#include "kneadlab/certify.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "kneadlab/number_system.hpp"

namespace kneadlab {

namespace {

// Tracks the smallest certified gap across a sequence of comparisons.
class MarginTracker {
 public:
  explicit MarginTracker(mpfr_prec_t prec) : best_(prec), has_(false) {}

  void observe(const BigFloat& gap) {
    if (!has_ || mpfr_cmp(gap.raw(), best_.raw()) < 0) {
      best_ = gap;
      has_ = true;
    }
  }

  std::string str() const { return has_ ? best_.to_decimal() : ""; }

 private:
  BigFloat best_;
  bool has_;
};

enum class Containment { Inside, Outside, Unresolved };

// Certified position of x against the closed interval spanned by two endpoint
// enclosures. Inside/Outside only when every point of x relates that way to
// every admissible pair of endpoints; gap_out receives the certified distance.
Containment closed_containment(const Interval& x, const Interval& ep1,
                               const Interval& ep2, BigFloat* gap_out) {
  const mpfr_prec_t prec = x.precision();
  BigFloat lo_cap(prec), hi_cap(prec);
  BigFloat lo_floor(prec), hi_ceil(prec);
  mpfr_min(lo_cap.raw(), ep1.hi().raw(), ep2.hi().raw(), MPFR_RNDU);
  mpfr_max(hi_cap.raw(), ep1.lo().raw(), ep2.lo().raw(), MPFR_RNDD);
  mpfr_min(lo_floor.raw(), ep1.lo().raw(), ep2.lo().raw(), MPFR_RNDD);
  mpfr_max(hi_ceil.raw(), ep1.hi().raw(), ep2.hi().raw(), MPFR_RNDU);
  if (mpfr_cmp(x.lo().raw(), lo_cap.raw()) >= 0 &&
      mpfr_cmp(x.hi().raw(), hi_cap.raw()) <= 0) {
    if (gap_out) {
      BigFloat g1(prec), g2(prec);
      mpfr_sub(g1.raw(), x.lo().raw(), lo_cap.raw(), MPFR_RNDD);
      mpfr_sub(g2.raw(), hi_cap.raw(), x.hi().raw(), MPFR_RNDD);
      mpfr_min(gap_out->raw(), g1.raw(), g2.raw(), MPFR_RNDD);
    }
    return Containment::Inside;
  }
  if (mpfr_cmp(x.hi().raw(), lo_floor.raw()) <= 0 ||
      mpfr_cmp(x.lo().raw(), hi_ceil.raw()) >= 0) {
    if (gap_out) {
      BigFloat g1(prec), g2(prec);
      mpfr_sub(g1.raw(), lo_floor.raw(), x.hi().raw(), MPFR_RNDD);
      mpfr_sub(g2.raw(), x.lo().raw(), hi_ceil.raw(), MPFR_RNDD);
      mpfr_max(gap_out->raw(), g1.raw(), g2.raw(), MPFR_RNDD);
    }
    return Containment::Outside;
  }
  return Containment::Unresolved;
}

[[noreturn]] void unresolved(const std::string& where) {
  throw Error(ErrorCode::PrecisionExhausted,
              "interval comparison unresolved in " + where +
                  "; raise the precision bound");
}

}  // namespace

std::string to_string(CertVerdict v) {
  switch (v) {
    case CertVerdict::CertifiedAtDepth: return "certified_at_depth";
    case CertVerdict::Refuted: return "refuted";
    case CertVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

long long CoverContext::s_at(long long k) const {
  const mpz_class& v = cut.at(k);
  if (!v.fits_slong_p())
    throw Error(ErrorCode::IndexOutOfRange,
                "cutting time exceeds the cover scale");
  return v.get_si();
}

CoverContext make_cover_context(const KneadingMap& map, long long i_max,
                                mpfr_prec_t max_precision) {
  auto blocks = map.special_indices(static_cast<int>(i_max) + 2);
  const long long k_top = blocks[static_cast<size_t>(i_max)];  // k_{i_max+1}
  CuttingTimes cut = cutting_times(map, k_top + 2);
  const mpz_class& top = cut.at(k_top);
  if (!top.fits_slong_p() || top.get_si() > (1 << 22))
    throw Error(ErrorCode::BadInput, "cover scale too large; reduce i_max");
  const long long n_max = top.get_si() + 2;
  const long long n_sym = n_max + 64;
  KneadingSequence kappa = kneading_sequence(map, n_sym);
  // Slope window small enough that every orbit enclosure up to n_max stays
  // decisively on one side of 1/2: 2^-(n_sym + 64).
  mpq_class width(mpz_class(1), mpz_class(1) << 62);
  for (long long b = 62; b < n_sym + 64; b += 62)
    width /= (mpz_class(1) << 62);
  SlopeEnclosure slope = solve_slope(kappa, width, max_precision * 64);
  OrbitTable orbit = critical_orbit(slope, n_max, max_precision * 64);
  return CoverContext{map,ots
      std::move(cut), std::move(kappa), std::move(slope),
                      std::move(orbit), std::move(blocks)};
}

DeltaCover build_cover(const CoverContext& ctx, long long i) {
  if (i < 1 || i + 1 > static_cast<long long>(ctx.block_indices.size()))
    throw Error(ErrorCode::BadInput, "cover index out of range");
  DeltaCover cover;
  cover.i = i;
  cover.k_i = ctx.block_indices[static_cast<size_t>(i - 1)];
  const long long lo = ctx.s_at(cover.k_i - 1);
  const long long hi = ctx.s_at(cover.k_i);
  for (long long n = lo + 1; n <= hi; ++n)
    cover.pieces.push_back(level(ctx.orbit, ctx.cut, n));
  return cover;
}

CheckReport verify_claim1(const CoverContext& ctx, long long i) {
  const char* name = "claim1_block_anchor_central";
  const long long k_i = ctx.block_indices[static_cast<size_t>(i - 1)];
  const Interval& x = ctx.orbit.point(ctx.s_at(k_i - 1));
  MarginTracker margin(ctx.orbit.precision_bits());
  for (long long k = 0; k <= k_i; ++k) {
    if (k == k_i - 1) continue;  // x is this endpoint itself
    const Interval& ck = ctx.orbit.point(ctx.s_at(k));
    const Interval mirror = Interval::one_minus(ck);
    BigFloat gap(ctx.orbit.precision_bits());
    switch (closed_containment(x, ck, mirror, &gap)) {
      case Containment::Inside:
        margin.observe(gap);
        break;
      case Containment::Outside:
        return CheckReport::fail(name, i,
                                 {{"i", std::to_string(i)},
                                  {"k", std::to_string(k)}},
                                 "orbit point escapes the central interval");
      case Containment::Unresolved:
        unresolved(name);
    }
  }
  auto r = CheckReport::pass(name, i);
  r.margin = margin.str();
  return r;
}

CheckReport verify_claim2(const CoverContext& ctx, long long i) {
  const char* name = "claim2_orbit_avoids_top_interior";
  const long long k_i = ctx.block_indices[static_cast<size_t>(i - 1)];
  const long long top = ctx.s_at(k_i);
  const Level dtop = level(ctx.orbit, ctx.cut, top);
  MarginTracker margin(ctx.orbit.precision_bits());
  for (long long n = 1; n <= top; ++n) {
    if (n == dtop.n || n == dtop.beta_index) continue;  // boundary by index
    BigFloat gap(ctx.orbit.precision_bits());
    switch (closed_containment(ctx.orbit.point(n), ctx.orbit.point(dtop.n),
                               ctx.orbit.point(dtop.beta_index), &gap)) {
      case Containment::Outside:
        margin.observe(gap);
        break;
      case Containment::Inside:
        return CheckReport::fail(name, i,
                                 {{"i", std::to_string(i)},
                                  {"n", std::to_string(n)}},
                                 "orbit point inside the top level interior");
      case Containment::Unresolved:
        unresolved(name);
    }
  }
  auto r = CheckReport::pass(name, i);
  r.margin = margin.str();
  return r;
}

CheckReport verify_claim3(const CoverContext& ctx, const DeltaCover& cover) {
  const char* name = "claim3_cover_disjoint";
  MarginTracker margin(ctx.orbit.precision_bits());
  for (size_t a = 0; a < cover.pieces.size(); ++a) {
    for (size_t b = a + 1; b < cover.pieces.size(); ++b) {
      const Interval& A = cover.pieces[a].enc;
      const Interval& B = cover.pieces[b].enc;
      BigFloat gap(ctx.orbit.precision_bits());
      if (Interval::certainly_less(A, B))
        mpfr_sub(gap.raw(), B.lo().raw(), A.hi().raw(), MPFR_RNDD);
      else if (Interval::certainly_less(B, A))
        mpfr_sub(gap.raw(), A.lo().raw(), B.hi().raw(), MPFR_RNDD);
      else
        return CheckReport::fail(
            name, cover.i,
            {{"i", std::to_string(cover.i)},
             {"m", std::to_string(cover.pieces[a].n)},
             {"n", std::to_string(cover.pieces[b].n)}},
            "cover pieces overlap or are unresolved");
      margin.observe(gap);
    }
  }
  auto r = CheckReport::pass(name, cover.i);
  r.margin = margin.str();
  return r;
}

namespace {

// Certified membership of orbit point n in some piece of the cover; symbolic
// when it is an endpoint of the piece by orbit index.
bool inside_some_piece(const CoverContext& ctx, long long n, const Interval& x,
                       const DeltaCover& cover, MarginTracker& margin) {
  for (const Level& piece : cover.pieces) {
    if (n == piece.n || n == piece.beta_index) return true;
    BigFloat gap(ctx.orbit.precision_bits());
    if (closed_containment(x, ctx.orbit.point(piece.n),
                           ctx.orbit.point(piece.beta_index),
                           &gap) == Containment::Inside) {
      margin.observe(gap);
      return true;
    }
  }
  return false;
}

}  // namespace

CheckReport verify_claim4(const CoverContext& ctx, long long i) {
  const char* name = "claim4_orbit_in_cover";
  const long long k_i = ctx.block_indices[static_cast<size_t>(i - 1)];
  const long long k_next = ctx.block_indices[static_cast<size_t>(i)];
  const long long lo = ctx.s_at(k_i - 1);
  const long long hi = ctx.s_at(k_next - 1);  // exclusive
  const DeltaCover cover = build_cover(ctx, i);
  MarginTracker margin(ctx.orbit.precision_bits());
  for (long long n = lo; n < hi; ++n) {
    // Block points are endpoints of their own level; the anchor c_{S_{k_i-1}}
    // is an endpoint of the top level.
    if (n <= ctx.s_at(k_i)) continue;
    if (!inside_some_piece(ctx, n, ctx.orbit.point(n), cover, margin))
      return CheckReport::fail(name, i,
                               {{"i", std::to_string(i)},
                                {"n", std::to_string(n)}},
                               "orbit point not certified inside the cover");
  }
  // Explicit membership identity one step past the block top (third block on).
  if (i >= 2) {
    const long long k_prev = ctx.block_indices[static_cast<size_t>(i - 2)];
    const long long target = ctx.s_at(k_i - 1) + ctx.s_at(k_prev - 1) + 1;
    const long long n = ctx.s_at(k_i) + 1;
    if (n <= ctx.orbit.length() && target <= ctx.orbit.length()) {
      const Level piece = level(ctx.orbit, ctx.cut, target);
      BigFloat gap(ctx.orbit.precision_bits());
      const auto c =
          closed_containment(ctx.orbit.point(n), ctx.orbit.point(piece.n),
                             ctx.orbit.point(piece.beta_index), &gap);
      if (c == Containment::Outside)
        return CheckReport::fail(name, i,
                                 {{"i", std::to_string(i)},
                                  {"n", std::to_string(n)},
                                  {"level", std::to_string(target)}},
                                 "post-block membership identity fails");
      if (c == Containment::Unresolved) unresolved(name);
      margin.observe(gap);
    }
  }
  auto r = CheckReport::pass(name, i);
  r.margin = margin.str();
  return r;
}

CheckReport verify_claim5(const CoverContext& ctx, const DeltaCover& cover_i,
                          const DeltaCover& cover_next) {
  const char* name = "claim5_cover_nesting";
  const long long i = cover_i.i;
  // Exact integer identity between block increments, before any numerics
  // (meaningful from the third block on).
  if (i >= 2) {
    const long long k_prev = ctx.block_indices[static_cast<size_t>(i - 2)];
    const long long k_i = cover_i.k_i;
    const long long k_next = cover_next.k_i;
    const mpz_class lhs = ctx.cut.at(k_next - 1) - ctx.cut.at(k_i);
    const mpz_class rhs = ctx.cut.at(k_i - 1) - ctx.cut.at(k_prev - 1);
    if (lhs != rhs)
      return CheckReport::fail(name, i,
                               {{"i", std::to_string(i)},
                                {"lhs", lhs.get_str()},
                                {"rhs", rhs.get_str()}},
                               "block increment identity violated");
  }
  MarginTracker margin(ctx.orbit.precision_bits());
  for (const Level& inner : cover_next.pieces) {
    bool placed = false;
    for (const Level& outer : cover_i.pieces) {
      // Shared endpoints (by orbit index) are inside symbolically; the rest
      // need certified containment.
      bool ok = true;
      bool numeric = false;
      BigFloat worst(ctx.orbit.precision_bits());
      for (long long idx : {inner.n, inner.beta_index}) {
        if (idx == outer.n || idx == outer.beta_index) continue;
        BigFloat gap(ctx.orbit.precision_bits());
        const auto c =
            closed_containment(ctx.orbit.point(idx), ctx.orbit.point(outer.n),
                               ctx.orbit.point(outer.beta_index), &gap);
        if (c != Containment::Inside) {
          ok = false;
          break;
        }
        if (!numeric || mpfr_cmp(gap.raw(), worst.raw()) < 0) worst = gap;
        numeric = true;
      }
      if (ok) {
        if (numeric) margin.observe(worst);
        placed = true;
        break;
      }
    }
    if (!placed)
      return CheckReport::fail(name, i,
                               {{"i", std::to_string(i)},
                                {"piece", std::to_string(inner.n)}},
                               "piece of the finer cover not inside any piece "
                               "of the coarser one");
  }
  auto r = CheckReport::pass(name, i);
  r.margin = margin.str();
  return r;
}

CheckReport verify_injectivity(const CoverContext& ctx, const DeltaCover& cover) {
  const char* name = "injectivity_on_cover";
  const long long top = ctx.s_at(cover.k_i);
  MarginTracker margin(ctx.orbit.precision_bits());
  // Pieces whose closure may contain the turning point are exempt; only the
  // piece at the block's cutting time qualifies, and no other piece may even
  // numerically reach 1/2.
  for (const Level& piece : cover.pieces) {
    if (piece.n == top) continue;
    const bool may_hold_c = piece.enc.lo().cmp_d(0.5) <= 0 &&
                            piece.enc.hi().cmp_d(0.5) >= 0;
    if (may_hold_c)
      return CheckReport::fail(name, cover.i,
                               {{"i", std::to_string(cover.i)},
                                {"piece", std::to_string(piece.n)}},
                               "non-exempt piece may contain the turning point");
  }
  for (size_t a = 0; a < cover.pieces.size(); ++a) {
    if (cover.pieces[a].n == top) continue;
    for (size_t b = a + 1; b < cover.pieces.size(); ++b) {
      if (cover.pieces[b].n == top) continue;
      const Level ia = level(ctx.orbit, ctx.cut, cover.pieces[a].n + 1);
      const Level ib = level(ctx.orbit, ctx.cut, cover.pieces[b].n + 1);
      BigFloat gap(ctx.orbit.precision_bits());
      if (Interval::certainly_less(ia.enc, ib.enc))
        mpfr_sub(gap.raw(), ib.enc.lo().raw(), ia.enc.hi().raw(), MPFR_RNDD);
      else if (Interval::certainly_less(ib.enc, ia.enc))
        mpfr_sub(gap.raw(), ia.enc.lo().raw(), ib.enc.hi().raw(), MPFR_RNDD);
      else
        return CheckReport::fail(
            name, cover.i,
            {{"i", std::to_string(cover.i)},
             {"m", std::to_string(cover.pieces[a].n)},
             {"n", std::to_string(cover.pieces[b].n)}},
            "successor levels overlap: the step map cannot be one-to-one");
      margin.observe(gap);
    }
  }
  auto r = CheckReport::pass(name, cover.i);
  r.margin = margin.str();
  return r;
}

CheckReport check_overlap_lemma(const CoverContext& ctx, long long horizon) {
  const char* name = "overlap_lemma";
  const FamilyDefaults fd = family_defaults(ctx.map);
  if (!ctx.map.q_tends_to_infinity())
    return CheckReport::limited(name, horizon,
                                "skipped: Q does not tend to infinity");
  {
    auto strong = check_strong_admissible(
        ctx.map, std::max<long long>(horizon, fd.strong_from_k + 16),
        fd.strong_from_k);
    if (!strong.holds())
      return CheckReport::limited(name, horizon, "skipped: strong_admis fails");
  }
  const long long n_cap = std::min<long long>(horizon, ctx.orbit.length());
  long long k_cap = 0;
  while (k_cap + 1 < ctx.cut.count() && ctx.cut.at(k_cap + 1) <= to_mpz(n_cap))
    ++k_cap;
  // Closest precritical points up to generation max Q(k+1) - 1.
  long long gen_cap = 0;
  for (long long k = 1; k <= k_cap; ++k)
    gen_cap = std::max(gen_cap, ctx.map.q(k + 1) - 1);
  std::vector<PrecriticalPair> pre;
  for (long long g = 0; g <= gen_cap; ++g)
    pre.push_back(closest_precritical(ctx.orbit, ctx.cut, g));
  long long worst_bad = 0;
  for (long long t = 1; t <= k_cap; ++t) {
    for (long long r = 0; r < ctx.map.q(t + 1); ++r) {
      const long long n = ctx.s_at(r) + ctx.s_at(t);
      if (n > n_cap) continue;
      const Level dn = level(ctx.orbit, ctx.cut, n);
      for (long long k = 1; k <= k_cap; ++k) {
        const long long gen = ctx.map.q(k + 1) - 1;
        if (gen < 0) continue;
        const auto where = [&](const Interval& x) {
          return closed_containment(x, ctx.orbit.point(dn.n),
                                    ctx.orbit.point(dn.beta_index), nullptr);
        };
        const auto c_ck = where(ctx.orbit.point(ctx.s_at(k)));
        if (c_ck == Containment::Unresolved) unresolved(name);
        if (c_ck == Containment::Outside) continue;
        const auto cz = where(pre[static_cast<size_t>(gen)].z);
        const auto czh = where(pre[static_cast<size_t>(gen)].zhat);
        if (cz == Containment::Unresolved || czh == Containment::Unresolved)
          unresolved(name);
        if (cz == Containment::Inside || czh == Containment::Inside)
          worst_bad = std::max(worst_bad, k);
      }
    }
  }
  auto r = CheckReport::pass(name, horizon);
  r.witness["smallest_admissible_k"] = std::to_string(worst_bad + 1);
  r.note = "clean for all scanned k >= " + std::to_string(worst_bad + 1);
  return r;
}

const CheckRecord* Certificate::first_failing() const {
  for (const auto& c : checks)
    if (c.gating && c.report.verdict == Verdict::Fails) return &c;
  return nullptr;
}

Certificate build_certificate(const KneadingMap& map,
                              const std::string& description,
                              const CertifyOptions& opts) {
  Certificate cert;
  cert.map_description = description;
  cert.i_max = opts.i_max;
  cert.horizon = opts.horizon;
  cert.depth = opts.depth;
  const FamilyDefaults fd = family_defaults(map);
  cert.route =
      fd.cover_construction ? "cover_construction" : "odometer_conjugacy";
  const long long from_k = opts.from_k > 0 ? opts.from_k : fd.strong_from_k;
  const long long strong_horizon =
      fd.strong_horizon > 0 ? fd.strong_horizon : opts.horizon;

  auto add = [&](std::string sname, CheckReport rep, bool gating = true) {
    cert.checks.push_back({std::move(sname), std::move(rep), gating});
  };

  add("admissible", check_admissible(map, opts.horizon));
  add("strong_admissible",
      check_strong_admissible(map, strong_horizon, from_k));

  // Renormalization avoidance over a window of block-relevant k.
  {
    long long k_from = 1;
    if (map.is_example1())
      k_from = std::get<Example1Tail>(map.tail()).threshold;
    if (map.is_section5())
      k_from = std::get<Section5Tail>(map.tail()).k1 + 1;
    const long long k_to = std::min<long long>(opts.horizon, k_from + 48);
    CheckReport agg = CheckReport::pass("renormalization_avoidance", k_to);
    for (long long k = k_from; k <= k_to; ++k) {
      auto rep = is_renormalizable_at(map, k, 40);
      if (rep.verdict != Verdict::Fails) {
        agg = CheckReport::fail("renormalization_avoidance", k_to,
                                {{"k", std::to_string(k)}},
                                "renormalizable (or undecided) at this k");
        break;
      }
    }
    agg.note = "scanned k in [" + std::to_string(k_from) + ", " +
               std::to_string(k_to) + "]";
    add("renormalization_avoidance", std::move(agg));
  }

  if (cert.route == "odometer_conjugacy") {
    add("stop_carry",
        check_stop_carry(map, std::min<long long>(opts.horizon, 220)));
    add("invertibility_hypotheses",
        check_invertibility_hypotheses(map, opts.horizon));
    {
      const auto chains = zero_preimages(map, opts.depth);
      auto rep = chains.size() == 1
                     ? CheckReport::pass("unique_zero_preimage", opts.depth)
                     : CheckReport::fail(
                           "unique_zero_preimage", opts.depth,
                           {{"count", std::to_string(chains.size())}},
                           "zero code needs exactly one surviving chain");
      add("unique_zero_preimage", std::move(rep));
    }
  }

  // Exact cutting-time laws on the certificate scale.
  {
    const long long count = 120;
    CheckReport rep = CheckReport::pass("cutting_time_laws", count);
    try {
      CuttingTimes ct = cutting_times(map, count);
      for (long long k = 1; k <= count; ++k) {
        if (ct.at(k) != ct.at(k - 1) + ct.at(map.q(k)) ||
            ct.at(k) > 2 * ct.at(k - 1)) {
          rep = CheckReport::fail("cutting_time_laws", count,
                                  {{"k", std::to_string(k)}}, "law violated");
          break;
        }
      }
    } catch (const Error& e) {
      rep = CheckReport::fail("cutting_time_laws", count, {},
                              std::string("construction failed: ") + e.what());
    }
    add("cutting_time_laws", std::move(rep));
  }

  const bool want_covers = fd.cover_construction || opts.with_claims;
  const bool gating_covers = fd.cover_construction;

  try {
    std::optional<CoverContext> ctx;
    if (want_covers) {
      ctx = make_cover_context(map, opts.i_max, opts.max_precision);
    } else {
      KneadingSequence kap = kneading_sequence(map, 96);
      mpq_class w(mpz_class(1), mpz_class(1) << 60);
      w /= (mpz_class(1) << 60);
      SlopeEnclosure sl = solve_slope(kap, w, opts.max_precision * 64);
      OrbitTable orb = critical_orbit(sl, 64, opts.max_precision * 64);
      ctx = CoverContext{map,           cutting_times(map, 40), std::move(kap),
                         std::move(sl), std::move(orb),         {}};
    }
    cert.slope_lo = ctx->slope.a.lo().to_decimal();
    cert.slope_hi = ctx->slope.a.hi().to_decimal();
    cert.slope_verified_symbols = ctx->slope.verified_symbols;
    cert.precision_bits = ctx->orbit.precision_bits();
    {
      CheckReport rep =
          CheckReport::pass("itinerary_consistency", ctx->orbit.length() - 1);
      for (long long n = 1; n < ctx->orbit.length(); ++n)
        if (ctx->orbit.symbol(n) != ctx->kappa.at(n)) {
          rep = CheckReport::fail("itinerary_consistency", ctx->orbit.length(),
                                  {{"n", std::to_string(n)}},
                                  "orbit side disagrees with the symbol");
          break;
        }
      add("itinerary_consistency", std::move(rep));
    }
    if (want_covers) {
      std::vector<DeltaCover> covers;
      for (long long i = 1; i <= opts.i_max + 1; ++i)
        covers.push_back(build_cover(*ctx, i));
      for (long long i = 1; i <= opts.i_max; ++i) {
        const auto idx = static_cast<size_t>(i - 1);
        const std::string tag = "[i=" + std::to_string(i) + "]";
        add("claim1" + tag, verify_claim1(*ctx, i), gating_covers);
        add("claim2" + tag, verify_claim2(*ctx, i), gating_covers);
        add("claim3" + tag, verify_claim3(*ctx, covers[idx]), gating_covers);
        add("claim4" + tag, verify_claim4(*ctx, i), gating_covers);
        add("claim5" + tag, verify_claim5(*ctx, covers[idx], covers[idx + 1]),
            gating_covers);
        add("injectivity" + tag, verify_injectivity(*ctx, covers[idx]),
            gating_covers);
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PrecisionExhausted) throw;
    add("slope_realization",
        CheckReport::fail("slope_realization", 0, {},
                          std::string("failed: ") + e.what()));
  }

  bool any_fail = false, any_limited = false;
  for (const auto& c : cert.checks) {
    if (!c.gating) continue;
    if (c.report.verdict == Verdict::Fails) any_fail = true;
    if (c.report.verdict == Verdict::HorizonLimited) any_limited = true;
  }
  cert.overall = any_fail      ? CertVerdict::Refuted
                 : any_limited ? CertVerdict::Inconclusive
                               : CertVerdict::CertifiedAtDepth;
  return cert;
}

}  // namespace kneadlab
