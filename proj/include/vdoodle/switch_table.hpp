#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace vdoodle {

// Thrown on malformed external input (files, grammar, shapes). Distinct from
// domain failures such as axiom violations, which are reported as values.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AxiomViolation {
    // 1 = commutativity-iff-equal, 2 = column bijectivity (left division),
    // 3 = bijectivity of S(a,b) = (b*a, a*b)
    enum class Axiom { Ax1, Ax2a, Ax2b };
    Axiom axiom;
    std::vector<int> witness;  // element indices, 0-based

    std::string describe() const;  // renders 1-based, e.g. "axiom 1 violated at (1,2)"
};

struct AxiomReport {
    std::optional<AxiomViolation> violation;
    bool valid() const { return !violation.has_value(); }
};

// All derived operations of a doodle switch, as index tables.
struct DerivedOps {
    std::vector<std::vector<int>> dot_inv;     // x /. y : unique u with u*y = x
    std::vector<std::vector<int>> bullet;      // from S^{-1}(x,y) = (y•x, x•y)
    std::vector<std::vector<int>> bullet_inv;  // x •^{-1} y = x * (y /. x)
    std::vector<int> t;                        // t(x) = x*x
    std::vector<int> t_inv;
};

// A finite doodle switch given by its multiplication table:
// table[i][j] = i * j (row = left operand). Entries 0-based internally;
// the text file format and printed witnesses are 1-based.
class SwitchTable {
  public:
    // rows must be square with entries in [0, n). Shape errors throw
    // ParseError; axiom violations are recorded, not thrown.
    explicit SwitchTable(std::vector<std::vector<int>> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    int op(int a, int b) const { return rows_[a][b]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    const AxiomReport& report() const { return report_; }
    bool valid() const { return report_.valid(); }

    // S(a,b) = (b*a, a*b)
    std::array<int, 2> s_map(int a, int b) const;

    // Requires a valid switch (throws std::invalid_argument otherwise).
    DerivedOps derived_ops() const;

    // (a*b)*(c*b) == (a*c)*(b*c) for all triples; witness = first failure
    // in lexicographic (a,b,c) order.
    bool r3_compatible(std::optional<std::array<int, 3>>* witness = nullptr) const;

    bool operator==(const SwitchTable& other) const { return rows_ == other.rows_; }

  private:
    std::vector<std::vector<int>> rows_;
    AxiomReport report_;
};

// Runs the axiom checks in fixed order (1, 2a, 2b; row-major witnesses).
AxiomReport verify_axioms(const std::vector<std::vector<int>>& rows);

// Bijection phi with phi(x*y) = phi(x)*'phi(y), or nullopt.
std::optional<std::vector<int>> find_isomorphism(const SwitchTable& t1,
                                                 const SwitchTable& t2);

// All doodle switches of the given order, lexicographically sorted by
// row-major table. With up_to_iso, only the lexicographic minimum of each
// isomorphism class is kept.
std::vector<SwitchTable> enumerate_switches(int n, bool up_to_iso = false);

// The projection switch x*y = x.
SwitchTable projection_switch(int n);

// Text format: first line n, then n rows of n space-separated 1-based
// entries. '#' starts a comment line.
SwitchTable read_switch(std::istream& in);
SwitchTable load_switch(const std::string& path);
std::string write_switch(const SwitchTable& t);

}  // namespace vdoodle
