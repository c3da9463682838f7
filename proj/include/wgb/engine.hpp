#ifndef WGB_ENGINE_HPP
#define WGB_ENGINE_HPP

// The computational core: restricted/bilateral normal forms, the six
// restricted S-pair cases forming a Gebauer-Möller set, restricted
// completion, Weispfenning completion of a restricted basis to a bilateral
// one, fair enumeration, budgeted membership, and syzygy liftings.
//
// Divisors act on canonical elements through their leading structure: a
// reducer for the slot γ·υ·ω is a canonicalized multiple λ·(g ⋆ ρ) whose
// leading term lands exactly on υω, applied by division with canonical
// remainder modulo the Szekeres generator of the ideal at that term.

#include "algebra.hpp"
#include "syz.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace wgb::engine {

using algebra::LeadData;
using freering::Bound;
using freering::Cmp;
using freering::NcPoly;
using freering::Term;
using freering::Word;
using pres::Presentation;

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GBStatus { Complete, BoundExhausted };
enum class ReduceMode { Weak, Strong };
enum class Side { Restricted, Bilateral, Left };

struct EngineStats {
    long naivePairs = 0;
    long gmSize = 0;
    long reductions = 0;
};

struct GeneratorSet {
    std::vector<NcPoly> F;

    static GeneratorSet of(std::vector<NcPoly> gens, const Presentation& p) {
        GeneratorSet gs;
        for (auto& g : gens) {
            NcPoly c = pres::canonicalRep(g, p);
            if (!c.isZero()) gs.F.push_back(freering::normalizeSign(c, p.ring));
        }
        return gs;
    }
};

struct NfResult {
    NcPoly nf;
    std::vector<syz::Quotient> quotients;  // f = sum quotients·F + nf
    long steps = 0;
};

struct GBResult {
    GeneratorSet basis;
    GBStatus status = GBStatus::Complete;
    Bound bound;
    EngineStats stats;
    std::vector<syz::LiftRecord> lifts;
};

namespace detail {

// A presentation whose alphabet mixes both letter kinds but carries no
// relations has no Ore structure; the restricted machinery does not apply.
inline void requireRestrictedApplicable(const Presentation& p) {
    if (p.isFree() && p.ring.alph.nv() > 0 && p.ring.alph.nV() > 0)
        throw EngineError("restricted operations need an Ore presentation (C relations); "
                          "use the bilateral side on the free ring");
    if (!p.isFree() && !p.isSaturated())
        throw freering::SaturationInsufficient("presentation not saturated");
}

struct Candidate {
    NcPoly Q;             // canonicalized reducer multiple, leading slot = target
    coeff::Scalar gamma;  // its leading D-coefficient
    syz::Quotient quot;   // template (coefficient filled per step)
};

// Reducer candidates at the layered-leading slot (γ, υ, ω, pos) of m.
inline std::vector<Candidate> candidatesAt(const freering::Monomial& m,
                                           const std::vector<NcPoly>& F,
                                           const std::vector<LeadData>& lead,
                                           const Presentation& p, Side side) {
    auto [uf, of] = freering::splitCanonical(m.t.w, p.ring.alph);
    std::vector<Candidate> out;
    for (size_t gi = 0; gi < F.size(); ++gi) {
        const LeadData& ld = lead[gi];
        if (ld.pos != m.t.pos) continue;
        NcPoly P;
        Word rho, lamV;
        if (side == Side::Left) {
            if (!freering::isSuffix(ld.omega, of)) continue;
            lamV = freering::cutSuffix(ld.omega, of);
            P = pres::canonicalRep(freering::mulWords(coeff::Scalar(1), lamV, F[gi], {}, p.ring), p);
        } else {
            // restricted shape a·g⋆ρ; the bilateral side reduces the same way
            // against a bilateral-completed basis (Corollary route)
            if (!freering::isPrefix(ld.omega, of)) continue;
            rho = freering::cutPrefix(ld.omega, of);
            P = pres::canonicalRep(freering::mulWords(coeff::Scalar(1), {}, F[gi], rho, p.ring), p);
        }
        if (P.isZero()) continue;
        LeadData lp = algebra::leading(P, p);
        if (lp.omega != of || lp.pos != m.t.pos) continue;  // valuation dropped
        if (!freering::isSuffix(lp.upsilon, uf)) continue;
        Word lam = freering::cutSuffix(lp.upsilon, uf);
        NcPoly Q = lam.empty()
                       ? P
                       : pres::canonicalRep(freering::mulWords(coeff::Scalar(1), lam, P, {}, p.ring), p);
        if (Q.isZero()) continue;
        LeadData lq = algebra::leading(Q, p);
        if (lq.T != m.t) continue;  // the coefficient-word multiple collapsed
        Word quotLeft = side == Side::Left ? lamV : lam;  // recorded multiplier word
        Word quotRight = side == Side::Left ? Word{} : rho;
        if (side == Side::Left && !lam.empty()) continue;  // left reducers carry no v-side slack
        out.push_back({std::move(Q), lq.gamma, {coeff::Scalar(0), quotLeft, static_cast<int>(gi),
                                                quotRight}});
    }
    return out;
}

inline coeff::Scalar szekeresModulus(const freering::Monomial& m, const Presentation& p) {
    return pres::classifyTerm(m.t, p).c;
}

}  // namespace detail

// Normal form of f against F. Strong mode divides monomial slots by one
// reducer at a time with canonical remainders; weak mode combines all
// applicable reducers (and the Szekeres modulus of the presentation ideal)
// through a Bezout combination. Every step strictly decreases the reduced
// slot, which the loop asserts.
inline NfResult normalForm(NcPoly f, const std::vector<NcPoly>& F, const Presentation& p,
                           ReduceMode mode, Side side) {
    detail::requireRestrictedApplicable(p);
    NfResult res;
    NcPoly work = pres::canonicalRep(f, p);
    std::vector<LeadData> lead;
    lead.reserve(F.size());
    for (const auto& g : F) lead.push_back(algebra::leading(g, p));

    std::vector<freering::Monomial> done;
    std::optional<Term> lastSlot;
    std::optional<coeff::Scalar> lastResidue;
    while (!work.isZero()) {
        // layered-greatest monomial
        const freering::Monomial* mp = &work.monomials().front();
        for (const auto& m : work.monomials())
            if (algebra::compareLayered(m.t, mp->t, p.ring) == Cmp::GT) mp = &m;
        freering::Monomial m = *mp;

        // instrumented termination guard: the reduced slot never increases,
        // and at a fixed slot the coefficient residue strictly decreases
        if (lastSlot) {
            Cmp c = algebra::compareLayered(m.t, *lastSlot, p.ring);
            if (c == Cmp::GT) throw EngineError("reduction slot increased");
            if (c == Cmp::EQ && lastResidue && !(coeff::abs(m.c) < coeff::abs(*lastResidue)) &&
                m.c != *lastResidue)
                throw EngineError("reduction stalled at a slot");
        }

        auto cands = detail::candidatesAt(m, F, lead, p, side);
        coeff::Scalar ctau = detail::szekeresModulus(m, p);
        bool progressed = false;
        if (!cands.empty()) {
            if (mode == ReduceMode::Strong) {
                for (const auto& cand : cands) {
                    std::vector<coeff::Scalar> gens{cand.gamma};
                    if (!ctau.isZero()) gens.push_back(ctau);
                    auto sb = coeff::strongIdealBasis(gens, p.ring.mode);
                    coeff::Scalar r = coeff::canonRem(m.c, sb.g, p.ring.mode);
                    if (r == m.c) continue;
                    coeff::Scalar q = (m.c - r).exactDiv(sb.g);
                    coeff::Scalar cg = q * sb.combination[0];
                    if (!cg.isZero()) {
                        work = pres::canonicalRep(
                            freering::sub(work, freering::scale(cand.Q, cg), p.ring), p);
                        syz::Quotient qt = cand.quot;
                        qt.c = cg;
                        res.quotients.push_back(std::move(qt));
                    } else {
                        // the progress came from the ideal part alone
                        work = pres::canonicalRep(work, p);
                    }
                    ++res.steps;
                    progressed = true;
                    break;
                }
            } else {
                std::vector<coeff::Scalar> gens;
                for (const auto& cand : cands) gens.push_back(cand.gamma);
                if (!ctau.isZero()) gens.push_back(ctau);
                auto sb = coeff::strongIdealBasis(gens, p.ring.mode);
                coeff::Scalar r = coeff::canonRem(m.c, sb.g, p.ring.mode);
                if (r != m.c) {
                    coeff::Scalar q = (m.c - r).exactDiv(sb.g);
                    NcPoly acc = work;
                    for (size_t k = 0; k < cands.size(); ++k) {
                        coeff::Scalar ck = q * sb.combination[k];
                        if (ck.isZero()) continue;
                        acc = freering::sub(acc, freering::scale(cands[k].Q, ck), p.ring);
                        syz::Quotient qt = cands[k].quot;
                        qt.c = ck;
                        res.quotients.push_back(std::move(qt));
                    }
                    work = pres::canonicalRep(acc, p);
                    ++res.steps;
                    progressed = true;
                }
            }
        }
        if (!progressed) {
            done.push_back(m);
            work = freering::sub(work, NcPoly::monomial(m.c, m.t), p.ring);
            lastSlot.reset();
            lastResidue.reset();
        } else {
            lastSlot = m.t;
            lastResidue = m.c;
        }
    }
    res.nf = NcPoly::fromMonomials(std::move(done), p.ring);
    return res;
}

// ---- restricted S-pairs -------------------------------------------------------

namespace detail {

inline bool sameGen(const syz::SyzGen& x, const syz::SyzGen& y) {
    auto key = [](const syz::Leg& l) {
        return std::tuple(l.c, l.left, l.hGen, l.index, l.right, l.pos);
    };
    return key(x.a) == key(y.a) && key(x.b) == key(y.b) && x.w == y.w;
}

inline void pushUnique(std::vector<syz::SyzGen>& out, syz::SyzGen s) {
    for (const auto& e : out)
        if (sameGen(e, s)) return;
    out.push_back(std::move(s));
}

// The coefficient-side condition of the pair cases: a candidate is discarded
// exactly when its multiplier word is dead in R (class L of the coefficient
// ideal); proper nonzero classes are kept conservatively.
inline bool coeffWordAlive(const Word& lam, const Presentation& p) {
    return pres::classifyCoeffWord(lam, p).kind != pres::TermClassKind::L;
}

struct HLead {
    NcPoly h;
    LeadData ld;
};

inline std::vector<HLead> hLeads(const Presentation& p) {
    std::vector<HLead> out;
    for (const auto& h : p.saturatedH()) {
        HLead e{h, {}};
        auto [up, om] = freering::splitCanonical(h.leadingTerm().w, p.ring.alph);
        // leading factorization in the layered sense
        LeadData ld;
        algebra::Valuation v{{}, 1};
        bool have = false;
        for (const auto& m : h.monomials()) {
            algebra::Valuation mv{freering::vPart(m.t.w, p.ring.alph), 1};
            if (!have || algebra::compareValuations(mv, v, p.ring) == Cmp::GT) { v = mv; have = true; }
        }
        std::vector<freering::Monomial> coeffMs;
        for (const auto& m : h.monomials()) {
            auto [u2, o2] = freering::splitCanonical(m.t.w, p.ring.alph);
            if (o2 == v.omega) coeffMs.push_back({m.c, Term{u2, 1}});
        }
        ld.lcPoly = NcPoly::fromMonomials(std::move(coeffMs), p.ring);
        ld.omega = v.omega;
        ld.pos = 1;
        ld.upsilon = ld.lcPoly.leadingTerm().w;
        ld.gamma = ld.lcPoly.leadingCoeff();
        ld.T = Term{freering::concat(ld.upsilon, ld.omega), 1};
        e.ld = ld;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace detail

// The restricted Gebauer-Möller set: the B.1/B.3 pairs among basis elements
// with left-divisible module words, and the A.1-A.4 pairs against the
// presentation relations lifted to each occurring position. `naive` counts
// the raw word matches before the coefficient-side filtering.
inline std::vector<syz::SyzGen> spairsRestricted(const GeneratorSet& gs, const Presentation& p,
                                                 long* naiveOut = nullptr) {
    detail::requireRestrictedApplicable(p);
    const auto& F = gs.F;
    std::vector<LeadData> lead;
    lead.reserve(F.size());
    for (const auto& g : F) lead.push_back(algebra::leading(g, p));
    auto hs = detail::hLeads(p);

    long naive = 0;
    std::vector<syz::SyzGen> out;

    auto lcmOf = [&](const coeff::Scalar& a, const coeff::Scalar& b) {
        return coeff::lcm(a, b, p.ring.mode);
    };

    // B cases among basis elements
    for (size_t i = 0; i < F.size(); ++i) {
        for (size_t j = 0; j < F.size(); ++j) {
            if (i == j) continue;
            const LeadData& gi = lead[i];
            const LeadData& gj = lead[j];
            if (gi.pos != gj.pos) continue;
            if (!freering::isPrefix(gi.omega, gj.omega)) continue;
            if (gi.omega == gj.omega && i > j) continue;
            ++naive;
            Word rho = freering::cutPrefix(gi.omega, gj.omega);
            coeff::Scalar l = lcmOf(gi.gamma, gj.gamma);
            if (freering::isSuffix(gj.upsilon, gi.upsilon)) {  // B.1
                Word lam = freering::cutSuffix(gj.upsilon, gi.upsilon);
                if (detail::coeffWordAlive(lam, p)) {
                    syz::SyzGen s;
                    s.a = {l.exactDiv(gj.gamma), lam, false, static_cast<int>(j), {}, gj.pos};
                    s.b = {l.exactDiv(gi.gamma), {}, false, static_cast<int>(i), rho, gi.pos};
                    s.w = Term{freering::concat(gi.upsilon, gj.omega), gi.pos};
                    s.tag = "B.1";
                    detail::pushUnique(out, std::move(s));
                }
            }
            if (freering::isSuffix(gi.upsilon, gj.upsilon)) {  // B.3
                Word lam = freering::cutSuffix(gi.upsilon, gj.upsilon);
                if (detail::coeffWordAlive(lam, p)) {
                    syz::SyzGen s;
                    s.a = {l.exactDiv(gj.gamma), {}, false, static_cast<int>(j), {}, gj.pos};
                    s.b = {l.exactDiv(gi.gamma), lam, false, static_cast<int>(i), rho, gi.pos};
                    s.w = Term{freering::concat(gj.upsilon, gj.omega), gj.pos};
                    s.tag = "B.3";
                    detail::pushUnique(out, std::move(s));
                }
            }
        }
    }

    // A cases against the relation part of the saturated basis
    for (size_t i = 0; i < F.size(); ++i) {
        const LeadData& g = lead[i];
        for (size_t hi = 0; hi < hs.size(); ++hi) {
            const LeadData& h = hs[hi].ld;
            coeff::Scalar l = lcmOf(g.gamma, h.gamma);
            if (freering::isPrefix(g.omega, h.omega)) {
                ++naive;
                Word rho = freering::cutPrefix(g.omega, h.omega);
                if (freering::isSuffix(h.upsilon, g.upsilon)) {  // A.1
                    Word lam = freering::cutSuffix(h.upsilon, g.upsilon);
                    if (detail::coeffWordAlive(lam, p)) {
                        syz::SyzGen s;
                        s.a = {l.exactDiv(h.gamma), lam, true, static_cast<int>(hi), {}, g.pos};
                        s.b = {l.exactDiv(g.gamma), {}, false, static_cast<int>(i), rho, g.pos};
                        s.w = Term{freering::concat(g.upsilon, h.omega), g.pos};
                        s.tag = "A.1";
                        detail::pushUnique(out, std::move(s));
                    }
                }
                if (freering::isSuffix(g.upsilon, h.upsilon)) {  // A.3
                    Word lam = freering::cutSuffix(g.upsilon, h.upsilon);
                    if (detail::coeffWordAlive(lam, p)) {
                        syz::SyzGen s;
                        s.a = {l.exactDiv(h.gamma), {}, true, static_cast<int>(hi), {}, g.pos};
                        s.b = {l.exactDiv(g.gamma), lam, false, static_cast<int>(i), rho, g.pos};
                        s.w = Term{freering::concat(h.upsilon, h.omega), g.pos};
                        s.tag = "A.3";
                        detail::pushUnique(out, std::move(s));
                    }
                }
            }
            if (freering::isPrefix(h.omega, g.omega) && h.omega != g.omega) {
                ++naive;
                Word rho = freering::cutPrefix(h.omega, g.omega);
                if (freering::isSuffix(g.upsilon, h.upsilon)) {  // A.2
                    Word lam = freering::cutSuffix(g.upsilon, h.upsilon);
                    if (detail::coeffWordAlive(lam, p)) {
                        syz::SyzGen s;
                        s.a = {l.exactDiv(h.gamma), {}, true, static_cast<int>(hi), rho, g.pos};
                        s.b = {l.exactDiv(g.gamma), lam, false, static_cast<int>(i), {}, g.pos};
                        s.w = Term{freering::concat(h.upsilon, g.omega), g.pos};
                        s.tag = "A.2";
                        detail::pushUnique(out, std::move(s));
                    }
                }
                if (freering::isSuffix(h.upsilon, g.upsilon)) {  // A.4
                    Word lam = freering::cutSuffix(h.upsilon, g.upsilon);
                    if (detail::coeffWordAlive(lam, p)) {
                        syz::SyzGen s;
                        s.a = {l.exactDiv(h.gamma), lam, true, static_cast<int>(hi), rho, g.pos};
                        s.b = {l.exactDiv(g.gamma), {}, false, static_cast<int>(i), {}, g.pos};
                        s.w = Term{freering::concat(g.upsilon, g.omega), g.pos};
                        s.tag = "A.4";
                        detail::pushUnique(out, std::move(s));
                    }
                }
            }
        }
    }
    if (naiveOut) *naiveOut = naive;
    return out;
}

// Evaluates the restricted S-polynomial of a generator: the difference of its
// two legs applied to the actual polynomials. Relation legs canonicalize to
// zero, so A-type S-polynomials are single surviving multiples.
inline NcPoly spoly(const syz::SyzGen& s, const GeneratorSet& gs, const Presentation& p) {
    auto hs = p.saturatedH();
    auto evalLeg = [&](const syz::Leg& l) -> NcPoly {
        NcPoly base = l.hGen ? freering::atPosition(hs.at(l.index), l.pos) : gs.F.at(l.index);
        return pres::canonicalRep(freering::mulWords(l.c, l.left, base, l.right, p.ring), p);
    };
    return pres::canonicalRep(freering::sub(evalLeg(s.a), evalLeg(s.b), p.ring), p);
}

inline std::pair<long, long> pairStats(const GeneratorSet& gs, const Presentation& p) {
    long naive = 0;
    auto gm = spairsRestricted(gs, p, &naive);
    return {naive, static_cast<long>(gm.size())};
}

// ---- completion ----------------------------------------------------------------

namespace detail {

inline bool admitsPoly(const Bound& b, const NcPoly& f, const freering::Ring& R) {
    for (const auto& m : f.monomials())
        if (!b.admits(m.t, R)) return false;
    return true;
}

struct CompletionState {
    GeneratorSet gs;
    std::vector<syz::SyzGen> queue;
    size_t next = 0;
    EngineStats stats;
    std::vector<syz::LiftRecord> lifts;
    bool exhausted = false;

    void refreshQueue(const Presentation& p) {
        long naive = 0;
        auto all = spairsRestricted(gs, p, &naive);
        // keep the processed prefix, replace the pending tail with every
        // not-yet-processed generator of the refreshed set
        std::vector<syz::SyzGen> pending;
        for (auto& s : all) {
            bool seen = false;
            for (size_t k = 0; k < next; ++k)
                if (sameGen(queue[k], s)) { seen = true; break; }
            if (!seen) pending.push_back(std::move(s));
        }
        std::sort(pending.begin(), pending.end(),
                  [&](const syz::SyzGen& x, const syz::SyzGen& y) {
                      return syz::syzBefore(x, y, p.ring);
                  });
        queue.resize(next);
        queue.insert(queue.end(), pending.begin(), pending.end());
        stats.naivePairs = naive;
        stats.gmSize = static_cast<long>(all.size());
    }
};

}  // namespace detail

// Restricted completion with the adjoin gate: every pair of the current
// basis is processed; a nonzero reduced S-polynomial joins the basis when it
// fits the bound and flags exhaustion otherwise. Deterministic: the queue is
// totally ordered by (w, case, indices).
inline GBResult restrictedCompletion(const GeneratorSet& gens, const Presentation& p,
                                     const Bound& bound) {
    detail::requireRestrictedApplicable(p);
    detail::CompletionState st;
    st.gs = gens;
    st.refreshQueue(p);
    while (st.next < st.queue.size()) {
        syz::SyzGen s = st.queue[st.next++];
        NcPoly S = spoly(s, st.gs, p);
        auto nf = normalForm(S, st.gs.F, p, ReduceMode::Strong, Side::Restricted);
        st.stats.reductions += nf.steps;
        syz::LiftRecord rec;
        rec.sigma = s;
        rec.quotients = nf.quotients;
        rec.residual = nf.nf;
        if (!nf.nf.isZero()) {
            NcPoly nfn = freering::normalizeSign(nf.nf, p.ring);
            if (detail::admitsPoly(bound, nfn, p.ring)) {
                coeff::Scalar sign = nf.nf.leadingCoeff().exactDiv(nfn.leadingCoeff());
                int idx = static_cast<int>(st.gs.F.size());
                st.gs.F.push_back(nfn);
                rec.quotients.push_back({sign, {}, idx, {}});
                rec.residual = NcPoly::zero();
                rec.adjoinedIndex = idx;
                st.refreshQueue(p);
            } else {
                st.exhausted = true;
            }
        }
        st.lifts.push_back(std::move(rec));
    }
    GBResult out;
    out.basis = st.gs;
    out.status = st.exhausted ? GBStatus::BoundExhausted : GBStatus::Complete;
    out.bound = bound;
    out.stats = st.stats;
    out.lifts = st.lifts;
    return out;
}

namespace detail {

// Pure module words strictly below omega in the order module; finite because
// the order restricted to <V> is length-graded (sequential).
inline std::vector<Word> orderModuleBelow(const Word& omega, const Presentation& p) {
    std::vector<Word> out;
    for (auto& w : freering::enumerateWords(p.ring.alph, freering::LetterFilter::ModuleOnly,
                                            static_cast<int>(omega.size()))) {
        if (freering::compareWords(w, omega, p.ring.alph, p.ring.ord) != Cmp::LT) continue;
        if (!pres::inOrderModule(w, p)) continue;
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace detail

// Converts a free-ring completion result into the engine result shape.
inline GBResult fromClassical(classical::Result&& r, const Bound& bound) {
    GBResult out;
    out.basis.F = std::move(r.basis);
    out.status = r.complete ? GBStatus::Complete : GBStatus::BoundExhausted;
    out.bound = bound;
    out.stats.naivePairs = r.stats.naivePairs;
    out.stats.gmSize = r.stats.gmSize;
    out.stats.reductions = r.stats.reductions;
    out.lifts = std::move(r.lifts);
    return out;
}

// Bilateral completion via the Weispfenning tests: restricted completion
// first, then X_i ⋆ g and g ⋆ a_{ρjυ} must reduce to zero restrictedly; any
// nonzero normal form is adjoined and the loop restarts. On the free ring
// with both alphabets present this is served by the classical engine.
inline GBResult bilateralCompletion(const GeneratorSet& gens, const Presentation& p,
                                    const Bound& bound) {
    if (p.isFree() && p.ring.alph.nv() > 0 && p.ring.alph.nV() > 0) {
        Ring const& R = p.ring;
        return fromClassical(classical::completeBilateralFree(gens.F, R, bound), bound);
    }
    detail::requireRestrictedApplicable(p);
    GeneratorSet cur = gens;
    EngineStats total;
    while (true) {
        GBResult r = restrictedCompletion(cur, p, bound);
        total.naivePairs += r.stats.naivePairs;
        total.gmSize += r.stats.gmSize;
        total.reductions += r.stats.reductions;
        r.stats = total;
        if (r.status != GBStatus::Complete) return r;
        cur = r.basis;

        std::vector<NcPoly> adds;
        auto consider = [&](const NcPoly& t) -> bool {
            // returns false when the bound is exhausted
            if (t.isZero()) return true;
            auto nf = normalForm(t, cur.F, p, ReduceMode::Strong, Side::Restricted);
            total.reductions += nf.steps;
            if (nf.nf.isZero()) return true;
            NcPoly nfn = freering::normalizeSign(nf.nf, p.ring);
            if (!detail::admitsPoly(bound, nfn, p.ring)) return false;
            for (const auto& a : adds)
                if (a == nfn) return true;
            adds.push_back(nfn);
            return true;
        };

        Word Omega;
        for (const auto& g : cur.F) {
            Word om = algebra::leading(g, p).omega;
            if (freering::compareWords(om, Omega, p.ring.alph, p.ring.ord) == Cmp::GT) Omega = om;
        }
        bool exhausted = false;
        for (const auto& g : cur.F) {
            for (int i = 0; i < p.ring.alph.nV() && !exhausted; ++i) {
                NcPoly t = pres::canonicalRep(
                    freering::mulWords(coeff::Scalar(1), Word{p.ring.alph.VId(i)}, g, {}, p.ring), p);
                if (!consider(t)) exhausted = true;
            }
            if (exhausted) break;
            if (p.ring.alph.nv() > 0) {
                for (const Word& rho : detail::orderModuleBelow(Omega, p)) {
                    for (int j = 0; j < p.ring.alph.nv() && !exhausted; ++j) {
                        for (const auto& [a, up] : pres::structureConstants(rho, p.ring.alph.vId(j), p)) {
                            NcPoly t = pres::canonicalRep(freering::mulFree(g, a, p.ring), p);
                            if (!consider(t)) { exhausted = true; break; }
                        }
                    }
                    if (exhausted) break;
                }
            }
            if (exhausted) break;
        }
        if (exhausted) {
            GBResult out;
            out.basis = cur;
            out.status = GBStatus::BoundExhausted;
            out.bound = bound;
            out.stats = total;
            out.lifts = r.lifts;
            return out;
        }
        if (adds.empty()) {
            r.bound = bound;
            return r;  // Complete, with the final restricted run's certificates
        }
        for (auto& a : adds) cur.F.push_back(std::move(a));
    }
}

// ---- enumeration and membership -------------------------------------------------

struct Snapshot {
    GBResult result;
    Bound stage;
};

// Fair bound-increasing iteration: stage i processes every pending pair
// whose matched term the stage bound admits; the run halts Complete as soon
// as no pair is pending at all. The stage stream must be strictly widening.
inline std::vector<Snapshot> enumerateStages(const GeneratorSet& gens, const Presentation& p,
                                             const std::vector<Bound>& stream) {
    detail::requireRestrictedApplicable(p);
    for (size_t k = 0; k + 1 < stream.size(); ++k) {
        if (stream[k].kind != Bound::Kind::Degree || stream[k + 1].kind != Bound::Kind::Degree)
            throw EngineError("enumeration stages must be degree bounds");
        if (stream[k].deg >= stream[k + 1].deg) throw EngineError("non-monotone stage stream");
    }
    detail::CompletionState st;
    st.gs = gens;
    st.refreshQueue(p);
    std::vector<Snapshot> out;
    for (const Bound& stage : stream) {
        bool again = true;
        while (again) {
            again = false;
            for (size_t k = st.next; k < st.queue.size(); ++k) {
                if (!stage.admits(st.queue[k].w, p.ring)) continue;
                syz::SyzGen s = st.queue[k];
                st.queue.erase(st.queue.begin() + k);
                NcPoly S = spoly(s, st.gs, p);
                auto nf = normalForm(S, st.gs.F, p, ReduceMode::Strong, Side::Restricted);
                st.stats.reductions += nf.steps;
                syz::LiftRecord rec;
                rec.sigma = s;
                rec.quotients = nf.quotients;
                rec.residual = nf.nf;
                if (!nf.nf.isZero()) {
                    NcPoly nfn = freering::normalizeSign(nf.nf, p.ring);
                    coeff::Scalar sign = nf.nf.leadingCoeff().exactDiv(nfn.leadingCoeff());
                    int idx = static_cast<int>(st.gs.F.size());
                    st.gs.F.push_back(nfn);
                    rec.quotients.push_back({sign, {}, idx, {}});
                    rec.residual = NcPoly::zero();
                    rec.adjoinedIndex = idx;
                    st.refreshQueue(p);
                }
                st.lifts.push_back(std::move(rec));
                again = true;
                break;
            }
        }
        GBResult snap;
        snap.basis = st.gs;
        snap.status = st.next >= st.queue.size() ? GBStatus::Complete : GBStatus::BoundExhausted;
        snap.bound = stage;
        snap.stats = st.stats;
        snap.lifts = st.lifts;
        bool complete = snap.status == GBStatus::Complete;
        out.push_back({std::move(snap), stage});
        if (complete) break;
    }
    return out;
}

enum class MemberVerdict { Yes, No, Unknown };

struct MemberResult {
    MemberVerdict verdict;
    std::vector<syz::Quotient> representation;  // over the completed basis
    GBResult completion;
};

// Budgeted membership: complete within the budget, then decide by the weak
// normal form. No is only pronounced against a Complete basis.
inline MemberResult member(const NcPoly& g, const GeneratorSet& gens, const Presentation& p,
                           const Bound& budget, Side side = Side::Restricted) {
    if (side == Side::Left) throw EngineError("left membership is not supported");
    NcPoly gc = pres::canonicalRep(g, p);
    MemberResult out;
    if (gc.isZero()) {
        out.verdict = MemberVerdict::Yes;
        return out;
    }
    out.completion = side == Side::Bilateral ? bilateralCompletion(gens, p, budget)
                                             : restrictedCompletion(gens, p, budget);
    auto nf = normalForm(gc, out.completion.basis.F, p, ReduceMode::Weak, Side::Restricted);
    if (nf.nf.isZero()) {
        out.verdict = MemberVerdict::Yes;
        out.representation = nf.quotients;
        return out;
    }
    out.verdict = out.completion.status == GBStatus::Complete ? MemberVerdict::No
                                                              : MemberVerdict::Unknown;
    return out;
}

// ---- liftings -------------------------------------------------------------------

// Verifies and returns the lifting certificates of a completed run: the legs
// of every generator stay strictly above its quotients (so the leading form
// of the lifting is the generator itself) and the lifted syzygy evaluates to
// zero exactly.
inline std::vector<syz::LiftRecord> syzygyLiftings(const GBResult& r, const Presentation& p) {
    if (r.status != GBStatus::Complete)
        throw EngineError("liftings require a Complete completion");
    for (const auto& rec : r.lifts) {
        if (!rec.residual.isZero()) throw EngineError("completed record with nonzero residual");
        NcPoly acc = spoly(rec.sigma, r.basis, p);
        for (const auto& q : rec.quotients) {
            const NcPoly& base = r.basis.F.at(q.gen);
            Term composed{freering::concat(freering::concat(q.left, base.leadingTerm().w), q.right),
                          base.leadingTerm().pos};
            // strictly below the matched term in the layered sense
            if (algebra::compareLayered(composed, rec.sigma.w, p.ring) != Cmp::LT)
                throw EngineError("lift quotient does not drop below the syzygy valuation");
            acc = pres::canonicalRep(
                freering::sub(acc, pres::canonicalRep(
                                       freering::mulWords(q.c, q.left, base, q.right, p.ring), p),
                              p.ring),
                p);
        }
        if (!acc.isZero()) throw EngineError("lifted syzygy does not evaluate to zero");
    }
    return r.lifts;
}

}  // namespace wgb::engine

#endif  // WGB_ENGINE_HPP
