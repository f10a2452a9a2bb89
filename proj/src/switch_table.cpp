#include "vdoodle/switch_table.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vdoodle {

std::string AxiomViolation::describe() const {
    std::ostringstream os;
    switch (axiom) {
        case Axiom::Ax1: os << "axiom 1 violated at ("; break;
        case Axiom::Ax2a: os << "axiom 2a violated at ("; break;
        case Axiom::Ax2b: os << "axiom 2b violated at ("; break;
    }
    for (size_t i = 0; i < witness.size(); ++i)
        os << (i ? "," : "") << witness[i] + 1;
    os << ")";
    return os.str();
}

AxiomReport verify_axioms(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw ParseError("table is not square");
        for (int x : r)
            if (x < 0 || x >= n) throw ParseError("table entry out of range");
    }
    AxiomReport rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((rows[i][j] == rows[j][i]) != (i == j)) {
                rep.violation = {AxiomViolation::Axiom::Ax1, {i, j}};
                return rep;
            }
    for (int j = 0; j < n; ++j) {
        std::vector<char> seen(n, 0);
        for (int i = 0; i < n; ++i) {
            if (seen[rows[i][j]]) {
                rep.violation = {AxiomViolation::Axiom::Ax2a, {i, j}};
                return rep;
            }
            seen[rows[i][j]] = 1;
        }
    }
    std::vector<char> seen(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int p = rows[j][i] * n + rows[i][j];
            if (seen[p]) {
                rep.violation = {AxiomViolation::Axiom::Ax2b, {i, j}};
                return rep;
            }
            seen[p] = 1;
        }
    return rep;
}

SwitchTable::SwitchTable(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)), report_(verify_axioms(rows_)) {}

std::array<int, 2> SwitchTable::s_map(int a, int b) const {
    return {rows_[b][a], rows_[a][b]};
}

DerivedOps SwitchTable::derived_ops() const {
    if (!valid()) throw std::invalid_argument("derived_ops requires a valid doodle switch");
    const int n = order();
    DerivedOps d;
    d.dot_inv.assign(n, std::vector<int>(n, -1));
    d.bullet.assign(n, std::vector<int>(n, -1));
    d.bullet_inv.assign(n, std::vector<int>(n, -1));
    d.t.assign(n, -1);
    d.t_inv.assign(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            d.dot_inv[rows_[x][y]][y] = x;  // column inversion
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // S(a,b) = (c,d)  =>  S^{-1}(c,d) = (a,b) = (d•c, c•d)
            const int c = rows_[b][a], dd = rows_[a][b];
            d.bullet[dd][c] = a;
            d.bullet[c][dd] = b;
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            d.bullet_inv[x][y] = rows_[x][d.dot_inv[y][x]];
    for (int x = 0; x < n; ++x) d.t[x] = rows_[x][x];
    for (int x = 0; x < n; ++x) d.t_inv[d.t[x]] = x;
    return d;
}

bool SwitchTable::r3_compatible(std::optional<std::array<int, 3>>* witness) const {
    const int n = order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int lhs = rows_[rows_[a][b]][rows_[c][b]];
                const int rhs = rows_[rows_[a][c]][rows_[b][c]];
                if (lhs != rhs) {
                    if (witness) *witness = std::array<int, 3>{a, b, c};
                    return false;
                }
            }
    if (witness) witness->reset();
    return true;
}

std::optional<std::vector<int>> find_isomorphism(const SwitchTable& t1,
                                                 const SwitchTable& t2) {
    if (t1.order() != t2.order()) return std::nullopt;
    const int n = t1.order();
    std::vector<int> phi(n, -1);
    std::vector<char> used(n, 0);

    std::function<bool(int)> rec = [&](int x) -> bool {
        if (x == n) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            phi[x] = v;
            used[v] = 1;
            bool ok = true;
            for (int y = 0; y <= x && ok; ++y) {
                if (phi[y] < 0) continue;
                if (phi[t1.op(x, y)] >= 0 && phi[t1.op(x, y)] != t2.op(v, phi[y])) ok = false;
                if (ok && phi[t1.op(y, x)] >= 0 && phi[t1.op(y, x)] != t2.op(phi[y], v)) ok = false;
            }
            if (ok && rec(x + 1)) return true;
            used[v] = 0;
            phi[x] = -1;
        }
        return false;
    };
    if (rec(0)) return phi;
    return std::nullopt;
}

namespace {

// Lexicographic minimum of the conjugation orbit, for iso-class dedup.
std::vector<std::vector<int>> orbit_min(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto best = rows;
    do {
        std::vector<std::vector<int>> cand(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                cand[perm[i]][perm[j]] = perm[rows[i][j]];
        if (cand < best) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<SwitchTable> enumerate_switches(int n, bool up_to_iso) {
    if (n < 1) throw ParseError("switch order must be positive");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    {
        auto p = base;
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    // Columns are permutations (axiom 2a); prune axiom 1 against earlier
    // columns, check axiom 2b on completed tables.
    std::vector<std::vector<int>> cols;
    std::vector<std::vector<std::vector<int>>> found;
    std::function<void()> rec = [&]() {
        const int j = static_cast<int>(cols.size());
        if (j == n) {
            std::vector<std::vector<int>> rows(n, std::vector<int>(n));
            for (int i = 0; i < n; ++i)
                for (int c = 0; c < n; ++c) rows[i][c] = cols[c][i];
            if (verify_axioms(rows).valid()) found.push_back(std::move(rows));
            return;
        }
        for (const auto& pm : perms) {
            bool ok = true;
            for (int i = 0; i < j && ok; ++i)
                if (cols[i][j] == pm[i]) ok = false;  // rows[j][i] == rows[i][j], i != j
            if (ok) {
                cols.push_back(pm);
                rec();
                cols.pop_back();
            }
        }
    };
    rec();
    std::sort(found.begin(), found.end());

    if (up_to_iso) {
        std::vector<std::vector<std::vector<int>>> reps;
        for (const auto& rows : found)
            if (orbit_min(rows) == rows) reps.push_back(rows);
        found = std::move(reps);
    }
    std::vector<SwitchTable> out;
    out.reserve(found.size());
    for (auto& rows : found) out.emplace_back(std::move(rows));
    return out;
}

SwitchTable projection_switch(int n) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = i;
    return SwitchTable(rows);
}

SwitchTable read_switch(std::istream& in) {
    std::vector<int> nums;
    std::string line;
    while (std::getline(in, line)) {
        const auto h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        int v;
        while (ls >> v) nums.push_back(v);
        std::string junk;
        if (ls.clear(), ls >> junk, !junk.empty())
            throw ParseError("unexpected token in switch table: " + junk);
    }
    if (nums.empty()) throw ParseError("empty switch file");
    const int n = nums[0];
    if (n < 1 || static_cast<size_t>(n) * n + 1 != nums.size())
        throw ParseError("switch file does not contain an n x n table");
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int v = nums[1 + i * n + j];
            if (v < 1 || v > n) throw ParseError("switch entry out of range 1..n");
            rows[i][j] = v - 1;
        }
    return SwitchTable(rows);
}

SwitchTable load_switch(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open switch file: " + path);
    return read_switch(f);
}

std::string write_switch(const SwitchTable& t) {
    std::ostringstream os;
    os << t.order() << "\n";
    for (const auto& row : t.rows()) {
        for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j] + 1;
        os << "\n";
    }
    return os.str();
}

}  // namespace vdoodle
