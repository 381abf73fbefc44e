#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcss/bch.hpp"
#include "qcss/codes.hpp"

namespace qcss {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RowReport {
  std::string label;
  std::vector<Check> checks;
  /// Computed quantities, printed and serialized as-is.
  std::map<std::string, std::string> values;
  std::vector<std::string> notes;

  bool pass() const;
  void check(const std::string& name, bool ok, const std::string& detail = "");
};

struct TableReport {
  std::string title;
  std::vector<RowReport> rows;
  bool pass() const;
  std::string to_json() const;
  /// Aligned text: one line per row, failed checks and notes listed below it.
  std::string to_text() const;
};

struct Table1Row {
  std::size_t n, k, d;   // quantum [[n, k, d]]
  const char* hex;       // generator of the self-orthogonal code C, bit i = x^i
};
extern const std::vector<Table1Row> kTable1;

struct Table2Row {
  unsigned gk, q, l;     // PG(gk, q), l-spaces
  std::size_t n, k, d, dual_d, t;
};
extern const std::vector<Table2Row> kTable2;

struct TableOptions {
  /// Largest codeword count any exact enumeration may visit.
  std::uint64_t budget = kDefaultBudget;
  /// Bound passed to the split search for the row too large to enumerate.
  std::size_t split_bound = 15;
};

/// Checks one printed BCH row; `search` is search_self_orthogonal_bch(row.n), or
/// empty to run it.
RowReport verify_table1_row(const Table1Row& row, const TableOptions& opt,
                            const std::vector<SoBchResult>* search = nullptr);
TableReport verify_table1(const TableOptions& opt = {});

RowReport verify_table2_row(const Table2Row& row, const TableOptions& opt);
TableReport verify_table2(const TableOptions& opt = {});

/// Self-orthogonal RM(m, r) for m in [m_min, m_max] whose CSS code encodes at
/// least one qubit and corrects at least one error.
struct RmScanEntry {
  std::size_t m, r, n, k, quantum_k, d;
};
std::vector<RmScanEntry> rm_scan(std::size_t m_min = 4, std::size_t m_max = 7);
/// The six quantum parameter sets printed for the Reed-Muller family.
extern const std::vector<RmScanEntry> kRmPrinted;
TableReport verify_rm_scan(std::size_t m_min = 4, std::size_t m_max = 7);

}  // namespace qcss
