#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "conelink/invariants.hpp"
#include "conelink/report.hpp"

// Grid sweeps over (n, d) and the selftest property sweeps. Every kernel
// exists in a serial and an OpenMP-parallel flavor producing identical
// results; the serial path is the reference the parallel one is tested and
// benchmarked against.
namespace conelink::sweep {

enum class Mode { Serial, Parallel };

inline constexpr int kMaxTableDim = 64;
inline constexpr long kMaxTableDegree = 10000;

// Inclusive ranges; rejected unless 0 <= dim_lo <= dim_hi <= kMaxTableDim
// and 1 <= deg_lo <= deg_hi <= kMaxTableDegree.
struct TableSpec {
    int dim_lo;
    int dim_hi;
    long deg_lo;
    long deg_hi;
};

struct TableRow {
    int n;
    long d;
    BigInt middle;
    BigInt chi;
    LinkBettiVector link;
};

enum class TableLayout { Csv, JsonLines };

// Streams the whole table to `out` in lexicographic (n, d) order, one line
// per row ('\n' endings, CSV with a leading header row). Rows are rendered
// in blocks, each block split into contiguous per-thread ranges appended to
// thread-private buffers, so memory stays bounded and the bytes are
// identical in both modes.
void write_table(const TableSpec& spec, Mode mode, TableLayout layout, std::ostream& out);

// Materializes the rows, lexicographic in (n, d) regardless of mode. Handy
// for typed access on modest grids; write_table is the streaming path.
std::vector<TableRow> table_rows(const TableSpec& spec, Mode mode);

struct SelftestBounds {
    int max_dim = 10;
    long max_degree = 50;
};

struct PropertyResult {
    std::string name;
    bool pass = true;
    long cases = 0;
    std::string detail;
};

struct SelftestReport {
    SelftestBounds bounds;
    std::vector<PropertyResult> properties;

    bool all_pass() const;
};

// Oracle-agreement and invariant sweeps at the given bounds. Failures are
// reported, never thrown.
SelftestReport run_selftest(const SelftestBounds& bounds, Mode mode);

OutputRecord selftest_record(const SelftestReport& report);

} // namespace conelink::sweep
