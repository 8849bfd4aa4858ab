#pragma once
// Deterministic rectangle scan: classify every rational grid hole (i/D, j/D)
// inside a rectangle, emit a stable CSV, and summarise tag counts and the
// fraction of intrinsically ergodic cells. Output is byte-identical for any
// worker count because each cell is computed independently and rows are
// assembled in grid order.

#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "renorm.hpp"

namespace lexishift {

struct ScanSpec {
    long denominator = 64;
    Rat a_lo = Rat(1, 4);
    Rat a_hi = Rat(1, 2);
    Rat b_lo = Rat(1, 2);
    Rat b_hi = Rat(3, 4);
    unsigned jobs = 1;
};

struct ScanResult {
    std::string csv;
    std::size_t rows = 0;
    std::size_t ie_rows = 0;
    std::map<std::string, std::size_t> tag_counts;
    bool truncated = false;
};

namespace detail {

inline std::string scan_row(const Rat& a, const Rat& b) {
    Classification c = classify(a, b);
    std::string ratios;
    for (const Ratio& r : c.ratios) {
        if (!ratios.empty()) ratios += ';';
        ratios += r.str();
    }
    std::string row = rat_str(a) + "," + rat_str(b) + "," + c.tag + "," +
                      std::to_string(c.level) + "," + ratios + ",";
    if (c.entropy.kappa) row += fmt12(*c.entropy.kappa);
    row += "," + fmt12(c.entropy.h_bits) + "," + fmt12(c.entropy.dim) + "," +
           ie_kind_str(c.ie.kind) + "," + c.ie.provenance;
    return row;
}

}  // namespace detail

// The rectangle must keep a < 1/2 < b for every cell (a_hi <= 1/2 <= b_lo),
// so each hole contains the critical point and has a symbolic reduction.
inline ScanResult run_scan(const ScanSpec& spec,
                           const std::atomic<bool>* cancel = nullptr) {
    const long d = spec.denominator;
    if (d < 4) fail("DomainError", "scan denominator must be at least 4");
    if (!(spec.a_lo < spec.a_hi) || !(spec.b_lo < spec.b_hi))
        fail("DomainError", "scan rectangle is empty");
    if (spec.a_lo < 0 || spec.b_hi > 1)
        fail("DomainError", "scan rectangle must lie inside the unit square");
    const Rat half(1, 2);
    if (half < spec.a_hi || spec.b_lo < half)
        fail("DomainError", "scan rectangle must keep a < 1/2 < b for every cell");

    std::vector<std::pair<Rat, Rat>> cells;
    for (long i = 1; i < d; ++i) {
        Rat a(i, d);
        if (!(spec.a_lo < a && a < spec.a_hi)) continue;
        for (long j = 1; j < d; ++j) {
            Rat b(j, d);
            if (!(spec.b_lo < b && b < spec.b_hi)) continue;
            cells.emplace_back(a, b);
        }
    }

    std::vector<std::optional<std::string>> slots(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    unsigned jobs = spec.jobs == 0 ? 1 : spec.jobs;
    if (jobs > cells.size() && !cells.empty()) jobs = static_cast<unsigned>(cells.size());

    auto worker = [&](unsigned w) {
        for (std::size_t i = w; i < cells.size(); i += jobs) {
            if (cancel && cancel->load()) return;
            try {
                slots[i] = detail::scan_row(cells[i].first, cells[i].second);
            } catch (...) {
                errors[i] = std::current_exception();
                return;
            }
        }
    };
    if (jobs <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);

    ScanResult out;
    out.csv = "a,b,tag,level,ratios,kappa,h_bits,dim,ie,ie_provenance\n";
    std::size_t emitted = 0;
    while (emitted < slots.size() && slots[emitted].has_value()) ++emitted;
    for (std::size_t i = 0; i < emitted; ++i) {
        const std::string& row = *slots[i];
        out.csv += row + "\n";
        auto tag_end = row.find(',', row.find(',', row.find(',') + 1) + 1);
        auto tag_begin = row.find(',', row.find(',') + 1) + 1;
        out.tag_counts[row.substr(tag_begin, tag_end - tag_begin)]++;
        if (row.find(",IntrinsicallyErgodic,") != std::string::npos) ++out.ie_rows;
    }
    out.rows = emitted;
    out.truncated = emitted < cells.size();

    std::string footer = "# summary: rows=" + std::to_string(out.rows) + " ie_fraction=";
    footer += out.rows == 0
                  ? "0"
                  : fmt12(static_cast<double>(out.ie_rows) / static_cast<double>(out.rows));
    for (const auto& [tag, n] : out.tag_counts)
        footer += " " + tag + "=" + std::to_string(n);
    out.csv += footer + "\n";
    if (out.truncated)
        out.csv += "# truncated: interrupted after " + std::to_string(out.rows) + " of " +
                   std::to_string(cells.size()) + " cells\n";
    return out;
}

}  // namespace lexishift
