#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fcv::flops {

// Execution-side counter. Contraction kernels add 2 FLOPs per multiply-
// accumulate, softmax adds 5 FLOPs per element; everything else (bilinear
// taps, normalization, elementwise maps) is outside the accounting. Closed
// forms in this header must agree with the instrumented totals exactly, and
// a test drives both paths on the same config to prove it.
struct Counter {
    std::int64_t flops = 0;
    bool enabled = false;
};

inline Counter& counter() {
    thread_local Counter c;
    return c;
}

inline void reset() { counter().flops = 0; }
inline void enable(bool on) { counter().enabled = on; }
inline std::int64_t count() { return counter().flops; }

inline void add_macs(std::int64_t macs) {
    Counter& c = counter();
    if (c.enabled) c.flops += 2 * macs;
}

inline void add_softmax(std::int64_t elements) {
    Counter& c = counter();
    if (c.enabled) c.flops += 5 * elements;
}

// ---- closed-form forward counts ------------------------------------------

inline std::int64_t matmul(std::int64_t m, std::int64_t k, std::int64_t n) {
    return 2 * m * k * n;
}

inline std::int64_t softmax(std::int64_t elements) { return 5 * elements; }

inline std::int64_t conv2d(std::int64_t c_in, std::int64_t c_out,
                           std::int64_t kh, std::int64_t kw,
                           std::int64_t h_out, std::int64_t w_out) {
    return 2 * c_in * c_out * kh * kw * h_out * w_out;
}

// Scaled dot-product core (scores + softmax + aggregation), all heads, no
// input/output projections.
inline std::int64_t dense_attention_core(std::int64_t heads, std::int64_t lq,
                                         std::int64_t lk, std::int64_t d,
                                         std::int64_t dv) {
    return 2 * heads * lq * lk * d      // scores
           + softmax(heads * lq * lk)   // row softmax
           + 2 * heads * lq * lk * dv;  // aggregation
}

// Top-u sparse core. Measurement scores are always computed (exactly, over
// all keys, or over `key_samples` sampled keys); only the u selected rows
// pay softmax and aggregation. With score_reuse the selected rows reuse the
// measurement scores, otherwise they are recomputed against all keys.
inline std::int64_t saliency_attention_core(std::int64_t heads, std::int64_t lq,
                                            std::int64_t lk, std::int64_t d,
                                            std::int64_t dv, std::int64_t u,
                                            bool score_reuse = true,
                                            std::int64_t key_samples = 0) {
    const std::int64_t lm = key_samples > 0 ? key_samples : lk;
    std::int64_t total = 2 * heads * lq * lm * d;  // measurement scores
    if (!score_reuse || key_samples > 0) {
        total += 2 * heads * u * lk * d;           // selected-row scores
    }
    total += softmax(heads * u * lk);              // selected-row softmax
    total += 2 * heads * u * lk * dv;              // selected-row aggregation
    return total;
}

// q/k/v/out projections around an attention core at model width dm.
inline std::int64_t attention_projections(std::int64_t lq, std::int64_t lk,
                                          std::int64_t dm) {
    return matmul(lq, dm, dm)        // q
           + matmul(lk, dm, dm)      // k
           + matmul(lk, dm, dm)      // v
           + matmul(lq, dm, dm);     // out
}

struct ReportRow {
    std::string group;
    std::string name;
    std::int64_t flops = 0;
    std::int64_t params = 0;
};

struct Report {
    std::vector<ReportRow> rows;
    void add(std::string group, std::string name, std::int64_t f, std::int64_t p = 0) {
        rows.push_back({std::move(group), std::move(name), f, p});
    }
    std::int64_t total(const std::string& group) const {
        std::int64_t t = 0;
        for (const auto& r : rows)
            if (r.group == group) t += r.flops;
        return t;
    }
};

}  // namespace fcv::flops
