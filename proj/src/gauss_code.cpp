#include "vdoodle/gauss_code.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace vdoodle {

namespace {

void validate(const std::vector<std::vector<Visit>>& comps) {
    std::map<std::string, int> occ;
    for (const auto& c : comps)
        for (const auto& v : c) {
            if (v.symbol.empty() || v.symbol == "o")
                throw ParseError("invalid crossing symbol");
            ++occ[v.symbol];
        }
    for (const auto& [s, k] : occ)
        if (k != 2)
            throw ParseError("symbol '" + s + "' occurs " + std::to_string(k) +
                             " times (expected 2)");
}

}  // namespace

GaussCode::GaussCode(std::vector<std::vector<Visit>> components)
    : components_(std::move(components)) {
    validate(components_);
}

int GaussCode::crossing_count() const {
    int total = 0;
    for (const auto& c : components_) total += static_cast<int>(c.size());
    return total / 2;
}

int GaussCode::semiarc_count() const {
    int total = 0;
    for (const auto& c : components_) total += std::max<int>(1, c.size());
    return total;
}

std::vector<Semiarc> GaussCode::semiarcs() const {
    std::vector<Semiarc> out;
    int id = 0;
    for (int ci = 0; ci < component_count(); ++ci) {
        const int k = static_cast<int>(components_[ci].size());
        if (k == 0) {
            out.push_back({id++, ci, -1, -1});
            continue;
        }
        for (int p = 0; p < k; ++p) out.push_back({id++, ci, p, (p + 1) % k});
    }
    return out;
}

std::vector<CrossingTransits> GaussCode::crossings() const {
    // Semiarc p of a component leaves the visit at position p; the arc
    // arriving at p is (p-1) mod k.
    std::vector<int> offset(component_count());
    int acc = 0;
    for (int ci = 0; ci < component_count(); ++ci) {
        offset[ci] = acc;
        acc += std::max<int>(1, components_[ci].size());
    }
    std::map<std::string, CrossingTransits> by_symbol;
    std::vector<std::string> order;
    for (int ci = 0; ci < component_count(); ++ci) {
        const int k = static_cast<int>(components_[ci].size());
        for (int p = 0; p < k; ++p) {
            const Visit& v = components_[ci][p];
            const Transit tr{offset[ci] + (p - 1 + k) % k, offset[ci] + p};
            auto it = by_symbol.find(v.symbol);
            if (it == by_symbol.end()) {
                by_symbol[v.symbol] = {v.symbol, tr, {}, v.primed ? -1 : 1};
                order.push_back(v.symbol);
            } else {
                it->second.transit2 = tr;
                if (v.primed) it->second.sign = -it->second.sign;
            }
        }
    }
    std::vector<CrossingTransits> out;
    out.reserve(order.size());
    for (const auto& s : order) out.push_back(by_symbol[s]);
    return out;
}

GaussCode parse_gauss(const std::string& text) {
    std::vector<std::vector<Visit>> comps;
    std::string part;
    std::istringstream stream(text);
    std::vector<std::string> parts;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == '/') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        parts.push_back(cur);
    }
    for (const auto& p : parts) {
        std::istringstream ps(p);
        std::vector<std::string> toks;
        std::string t;
        while (ps >> t) toks.push_back(t);
        if (toks.empty()) throw ParseError("empty component in gauss code");
        if (toks.size() == 1 && toks[0] == "o") {
            comps.push_back({});
            continue;
        }
        std::vector<Visit> comp;
        for (auto& tok : toks) {
            bool primed = false;
            while (tok.size() > 1 && tok.back() == '\'') {
                primed = !primed;
                tok.pop_back();
            }
            comp.push_back({tok, primed});
        }
        comps.push_back(std::move(comp));
    }
    return GaussCode(std::move(comps));
}

std::string serialize_gauss(const GaussCode& code) {
    std::ostringstream os;
    for (int ci = 0; ci < code.component_count(); ++ci) {
        if (ci) os << " / ";
        const auto& c = code.components()[ci];
        if (c.empty()) {
            os << "o";
            continue;
        }
        for (size_t p = 0; p < c.size(); ++p) {
            if (p) os << " ";
            os << c[p].symbol;
            if (c[p].primed) os << "'";
        }
    }
    return os.str();
}

GaussCode load_gauss(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open gauss code file: " + path);
    std::ostringstream text;
    std::string line;
    while (std::getline(f, line)) {
        const auto h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        text << line << " ";
    }
    const std::string t = text.str();
    if (t.find_first_not_of(" \t\r\n") == std::string::npos)
        throw ParseError("empty gauss code file: " + path);
    return parse_gauss(t);
}

GaussCode disjoint_union(const GaussCode& a, const GaussCode& b) {
    auto comps = a.components();
    std::map<std::string, std::string> rename;
    int next = 0;
    auto taken = [&](const std::string& s) {
        for (const auto& c : a.components())
            for (const auto& v : c)
                if (v.symbol == s) return true;
        return false;
    };
    for (const auto& c : b.components()) {
        std::vector<Visit> comp;
        for (const auto& v : c) {
            auto it = rename.find(v.symbol);
            if (it == rename.end()) {
                std::string s = v.symbol;
                while (taken(s)) s = "u" + std::to_string(next++);
                it = rename.emplace(v.symbol, s).first;
            }
            comp.push_back({it->second, v.primed});
        }
        comps.push_back(std::move(comp));
    }
    return GaussCode(std::move(comps));
}

namespace {

// Key used to pick the minimal representative: per component, the visit
// sequence relabeled by global first occurrence, primes normalized to the
// second occurrence of negative crossings.
using Key = std::vector<std::vector<std::pair<int, bool>>>;

Key relabel(const std::vector<std::vector<Visit>>& comps,
            const std::map<std::string, int>& sign) {
    std::map<std::string, int> names;
    std::map<std::string, bool> seen;
    Key key;
    for (const auto& c : comps) {
        std::vector<std::pair<int, bool>> kc;
        for (const auto& v : c) {
            auto it = names.find(v.symbol);
            if (it == names.end())
                it = names.emplace(v.symbol, static_cast<int>(names.size())).first;
            const bool second = seen[v.symbol];
            seen[v.symbol] = true;
            kc.emplace_back(it->second, second && sign.at(v.symbol) < 0);
        }
        key.push_back(std::move(kc));
    }
    return key;
}

std::string symbol_name(int idx) {
    std::string s;
    do {
        s.insert(s.begin(), static_cast<char>('a' + idx % 26));
        idx = idx / 26 - 1;
    } while (idx >= 0);
    return s;
}

}  // namespace

GaussCode canonical_form(const GaussCode& code) {
    std::map<std::string, int> sign;
    for (const auto& ct : code.crossings()) sign[ct.symbol] = ct.sign;

    const int m = code.component_count();
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);

    bool have_best = false;
    Key best;
    std::vector<std::vector<Visit>> best_comps;
    std::vector<int> rot(m, 0);

    std::sort(perm.begin(), perm.end());
    do {
        // iterate over all rotation combinations for this permutation
        std::fill(rot.begin(), rot.end(), 0);
        while (true) {
            std::vector<std::vector<Visit>> cand;
            cand.reserve(m);
            for (int i = 0; i < m; ++i) {
                const auto& c = code.components()[perm[i]];
                std::vector<Visit> r(c.size());
                for (size_t p = 0; p < c.size(); ++p)
                    r[p] = c[(p + rot[i]) % c.size()];
                cand.push_back(std::move(r));
            }
            Key key = relabel(cand, sign);
            if (!have_best || key < best) {
                best = key;
                best_comps = cand;
                have_best = true;
            }
            int i = 0;
            for (; i < m; ++i) {
                const int k = std::max<size_t>(1, code.components()[perm[i]].size());
                if (++rot[i] < k) break;
                rot[i] = 0;
            }
            if (i == m) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // materialize the winning key with fresh letters
    std::map<std::string, int> names;
    std::map<std::string, bool> seen;
    std::vector<std::vector<Visit>> out;
    for (const auto& c : best_comps) {
        std::vector<Visit> comp;
        for (const auto& v : c) {
            auto it = names.find(v.symbol);
            if (it == names.end())
                it = names.emplace(v.symbol, static_cast<int>(names.size())).first;
            const bool second = seen[v.symbol];
            seen[v.symbol] = true;
            comp.push_back({symbol_name(it->second), second && sign.at(v.symbol) < 0});
        }
        out.push_back(std::move(comp));
    }
    return GaussCode(std::move(out));
}

}  // namespace vdoodle
