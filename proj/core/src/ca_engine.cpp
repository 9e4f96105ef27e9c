#include "olab/ca_engine.hpp"

#include <bit>
#include <cstring>

#include "olab/parallel.hpp"

namespace olab {

namespace {

inline int wrap(int i, int n) {
    if (i < 0) return i + n;
    if (i >= n) return i - n;
    return i;
}

}  // namespace

LatticeState step(const RuleTable& rule, const LatticeState& state) {
    const int n = state.size();
    LatticeState out(n);
    // rolling 7-bit window, leftmost neighbor in the MSB
    unsigned idx = 0;
    for (int d = -3; d <= 2; ++d) idx = (idx << 1) | state.cell(wrap(d, n));
    for (int i = 0; i < n; ++i) {
        idx = ((idx << 1) | state.cell(wrap(i + 3, n))) & 0x7f;
        out.set_cell(i, rule.get(static_cast<int>(idx)));
    }
    return out;
}

Outcome classify(const RuleTable& rule, const LatticeState& ic, int max_steps) {
    const int n = ic.size();
    LatticeState cur = ic;
    int ones = cur.ones_count();
    if (ones == 0) return Outcome::AllZeros;
    if (ones == n) return Outcome::AllOnes;
    for (int t = 0; t < max_steps; ++t) {
        LatticeState nxt = step(rule, cur);
        ones = nxt.ones_count();
        if (ones == 0) return Outcome::AllZeros;
        if (ones == n) return Outcome::AllOnes;
        if (nxt == cur) return Outcome::Unresolved;  // non-uniform fixed point
        cur = std::move(nxt);
    }
    return Outcome::Unresolved;
}

LatticeState make_ic(const IcSample& sample, int index) {
    Rng rng(derive_seed(sample.seed, static_cast<std::uint64_t>(index)));
    return LatticeState::random(rng, sample.lattice);
}

// ---------------------------------------------------------------------------
// Bit-sliced block kernel: cell-major lattice of 512-lane words, the rule
// applied as a balanced 7-level multiplexer over the neighbor planes.
// ---------------------------------------------------------------------------

namespace {

constexpr int kBlockWords = 8;
constexpr int kBlockLanes = kBlockWords * 64;  // 512 ICs per block

struct Vec {
    std::uint64_t w[kBlockWords];
};

inline void vec_zero(Vec& v) {
    for (int j = 0; j < kBlockWords; ++j) v.w[j] = 0;
}
inline void vec_ones(Vec& v) {
    for (int j = 0; j < kBlockWords; ++j) v.w[j] = ~0ull;
}
inline void vec_not(Vec& r, const Vec& a) {
    for (int j = 0; j < kBlockWords; ++j) r.w[j] = ~a.w[j];
}
inline void vec_mux(Vec& r, const Vec& sel, const Vec& a, const Vec& b) {
    for (int j = 0; j < kBlockWords; ++j) r.w[j] = a.w[j] ^ ((a.w[j] ^ b.w[j]) & sel.w[j]);
}
inline bool vec_any(const Vec& a) {
    std::uint64_t acc = 0;
    for (int j = 0; j < kBlockWords; ++j) acc |= a.w[j];
    return acc != 0;
}

// Classifies up to kBlockLanes ICs in lockstep. `packed` holds the ICs
// lane-major, words_per_state words each. Outcomes land in out[0..lanes).
void classify_block(const RuleTable& rule, const std::uint64_t* packed, int lanes, int n,
                    int max_steps, Outcome* out) {
    const int wps = (n + 63) / 64;
    std::vector<Vec> cur(n), nxt(n);
    for (auto& v : cur) vec_zero(v);

    for (int lane = 0; lane < lanes; ++lane) {
        const std::uint64_t* ic = packed + static_cast<std::size_t>(lane) * wps;
        for (int c = 0; c < n; ++c) {
            const std::uint64_t bit = (ic[c >> 6] >> (c & 63)) & 1u;
            cur[c].w[lane >> 6] |= bit << (lane & 63);
        }
    }

    // leaf selector: output pair (table[2k], table[2k+1]) keyed by the
    // rightmost neighbor
    std::uint8_t code[64];
    for (int k = 0; k < 64; ++k)
        code[k] = static_cast<std::uint8_t>((rule.get(2 * k) ? 2 : 0) | (rule.get(2 * k + 1) ? 1 : 0));

    Vec active;
    vec_zero(active);
    for (int lane = 0; lane < lanes; ++lane) active.w[lane >> 6] |= 1ull << (lane & 63);

    for (int i = 0; i < lanes; ++i) out[i] = Outcome::Unresolved;

    auto assign = [&](const Vec& mask, Outcome oc) {
        for (int j = 0; j < kBlockWords; ++j) {
            std::uint64_t m = mask.w[j];
            while (m) {
                const int b = std::countr_zero(m);
                out[j * 64 + b] = oc;
                m &= m - 1;
            }
        }
    };

    auto settle_uniform = [&](const std::vector<Vec>& state) {
        Vec all_and, all_or;
        vec_ones(all_and);
        vec_zero(all_or);
        for (int c = 0; c < n; ++c)
            for (int j = 0; j < kBlockWords; ++j) {
                all_and.w[j] &= state[c].w[j];
                all_or.w[j] |= state[c].w[j];
            }
        Vec zeros, ones;
        for (int j = 0; j < kBlockWords; ++j) {
            zeros.w[j] = ~all_or.w[j] & active.w[j];
            ones.w[j] = all_and.w[j] & active.w[j];
        }
        assign(zeros, Outcome::AllZeros);
        assign(ones, Outcome::AllOnes);
        for (int j = 0; j < kBlockWords; ++j) active.w[j] &= ~(zeros.w[j] | ones.w[j]);
    };

    settle_uniform(cur);  // a uniform IC is already classified at step 0

    Vec const_zero, const_one, not_x6;
    vec_zero(const_zero);
    vec_ones(const_one);

    for (int t = 0; t < max_steps && vec_any(active); ++t) {
        for (int i = 0; i < n; ++i) {
            const Vec& x0 = cur[wrap(i - 3, n)];
            const Vec& x1 = cur[wrap(i - 2, n)];
            const Vec& x2 = cur[wrap(i - 1, n)];
            const Vec& x3 = cur[i];
            const Vec& x4 = cur[wrap(i + 1, n)];
            const Vec& x5 = cur[wrap(i + 2, n)];
            const Vec& x6 = cur[wrap(i + 3, n)];
            vec_not(not_x6, x6);
            // leaf k covers the output pair for neighborhood prefix k:
            // 00 -> constant 0, 01 -> x6, 10 -> ~x6, 11 -> constant 1
            Vec t64[64];
            for (int k = 0; k < 64; ++k) {
                switch (code[k]) {
                    case 0: t64[k] = const_zero; break;
                    case 1: t64[k] = x6; break;
                    case 2: t64[k] = not_x6; break;
                    default: t64[k] = const_one; break;
                }
            }
            const Vec* sels[6] = {&x5, &x4, &x3, &x2, &x1, &x0};
            int m = 32;
            for (int s = 0; s < 6; ++s) {
                const Vec& sel = *sels[s];
                for (int k = 0; k < m; ++k) vec_mux(t64[k], sel, t64[2 * k], t64[2 * k + 1]);
                m >>= 1;
            }
            nxt[i] = t64[0];
        }

        Vec all_and, all_or, diff;
        vec_ones(all_and);
        vec_zero(all_or);
        vec_zero(diff);
        for (int c = 0; c < n; ++c)
            for (int j = 0; j < kBlockWords; ++j) {
                all_and.w[j] &= nxt[c].w[j];
                all_or.w[j] |= nxt[c].w[j];
                diff.w[j] |= nxt[c].w[j] ^ cur[c].w[j];
            }
        Vec zeros, ones, frozen;
        for (int j = 0; j < kBlockWords; ++j) {
            zeros.w[j] = ~all_or.w[j] & active.w[j];
            ones.w[j] = all_and.w[j] & active.w[j];
        }
        assign(zeros, Outcome::AllZeros);
        assign(ones, Outcome::AllOnes);
        for (int j = 0; j < kBlockWords; ++j) {
            active.w[j] &= ~(zeros.w[j] | ones.w[j]);
            frozen.w[j] = ~diff.w[j] & active.w[j];  // stuck on a non-uniform fixed point
            active.w[j] &= ~frozen.w[j];
        }
        cur.swap(nxt);
    }
}

}  // namespace

std::vector<Outcome> classify_sample(const RuleTable& rule, const IcSample& sample, int max_steps,
                                     int threads) {
    const int n = sample.lattice;
    const int wps = (n + 63) / 64;
    const int count = sample.count;
    std::vector<Outcome> out(count);
    const int blocks = (count + kBlockLanes - 1) / kBlockLanes;
    parallel_for(0, blocks, threads, [&](std::int64_t blk) {
        const int first = static_cast<int>(blk) * kBlockLanes;
        const int lanes = std::min(kBlockLanes, count - first);
        std::vector<std::uint64_t> packed(static_cast<std::size_t>(lanes) * wps);
        for (int lane = 0; lane < lanes; ++lane) {
            Rng rng(derive_seed(sample.seed, static_cast<std::uint64_t>(first + lane)));
            std::uint64_t* dst = packed.data() + static_cast<std::size_t>(lane) * wps;
            for (int j = 0; j < wps; ++j) dst[j] = rng.next();
            const int tail = n & 63;
            if (tail) dst[wps - 1] &= (1ull << tail) - 1;
        }
        classify_block(rule, packed.data(), lanes, n, max_steps, out.data() + first);
    });
    return out;
}

std::vector<Outcome> classify_states(const RuleTable& rule, std::span<const LatticeState> ics,
                                     int max_steps, int threads) {
    if (ics.empty()) return {};
    const int n = ics.front().size();
    const int wps = (n + 63) / 64;
    const int count = static_cast<int>(ics.size());
    std::vector<Outcome> out(count);
    const int blocks = (count + kBlockLanes - 1) / kBlockLanes;
    parallel_for(0, blocks, threads, [&](std::int64_t blk) {
        const int first = static_cast<int>(blk) * kBlockLanes;
        const int lanes = std::min(kBlockLanes, count - first);
        std::vector<std::uint64_t> packed(static_cast<std::size_t>(lanes) * wps);
        for (int lane = 0; lane < lanes; ++lane)
            std::memcpy(packed.data() + static_cast<std::size_t>(lane) * wps,
                        ics[first + lane].words().data(), wps * sizeof(std::uint64_t));
        classify_block(rule, packed.data(), lanes, n, max_steps, out.data() + first);
    });
    return out;
}

namespace {

FitnessEstimate tally(std::span<const Outcome> outcomes, std::span<const std::uint8_t> majority_one) {
    std::int64_t k = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const bool correct = majority_one[i] ? outcomes[i] == Outcome::AllOnes
                                             : outcomes[i] == Outcome::AllZeros;
        k += correct;
    }
    return {k, static_cast<std::int64_t>(outcomes.size())};
}

}  // namespace

FitnessEstimate standard_performance(const RuleTable& rule, const IcSample& sample, int max_steps,
                                     int threads) {
    const auto outcomes = classify_sample(rule, sample, max_steps, threads);
    std::vector<std::uint8_t> majority_one(sample.count);
    for (int i = 0; i < sample.count; ++i) {
        Rng rng(derive_seed(sample.seed, static_cast<std::uint64_t>(i)));
        const LatticeState ic = LatticeState::random(rng, sample.lattice);
        majority_one[i] = ic.ones_count() * 2 > sample.lattice;
    }
    return tally(outcomes, majority_one);
}

FitnessEstimate evaluate_states(const RuleTable& rule, std::span<const LatticeState> ics,
                                int max_steps, int threads) {
    const auto outcomes = classify_states(rule, ics, max_steps, threads);
    std::vector<std::uint8_t> majority_one(ics.size());
    for (std::size_t i = 0; i < ics.size(); ++i)
        majority_one[i] = ics[i].ones_count() * 2 > ics[i].size();
    return tally(outcomes, majority_one);
}

}  // namespace olab
