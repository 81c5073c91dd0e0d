#include "sympq/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sympq/errors.hpp"

namespace sympq {

namespace {

std::string join_parts(const std::vector<int>& parts) {
    if (parts.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must weakly decrease");
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
std::string Partition::to_string() const { return join_parts(parts_); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i && parts_[i] >= parts_[i - 1]) throw DomainError("strict partition parts must strictly decrease");
    }
}

int StrictPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
std::string StrictPartition::to_string() const { return join_parts(parts_); }

std::vector<std::pair<int, int>> StrictPartition::shifted_cells() const {
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= length(); ++i)
        for (int j = i; j <= parts_[i - 1] + i - 1; ++j) cells.emplace_back(i, j);
    return cells;
}

std::vector<int> parse_parts(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty() || s == "-" || s == "()" || s == "0") return {};
    if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), ::isdigit))
            throw ParseError("bad partition '" + std::string(text) + "'");
        int v = std::stoi(tok);
        if (v != 0) parts.push_back(v);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return parts;
}

Partition parse_partition(std::string_view text) {
    auto parts = parse_parts(text);
    try {
        return Partition(parts);
    } catch (const DomainError& e) {
        throw ParseError("'" + std::string(text) + "' is not a partition");
    }
}

StrictPartition parse_strict(std::string_view text) {
    auto parts = parse_parts(text);
    try {
        return StrictPartition(parts);
    } catch (const DomainError& e) {
        throw ParseError("'" + std::string(text) + "' is not a strict partition");
    }
}

StrictPartition staircase(int r) {
    std::vector<int> p;
    for (int i = r; i >= 1; --i) p.push_back(i);
    return StrictPartition(p);
}

bool contains(const StrictPartition& outer, const StrictPartition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

SkewShiftedShape::SkewShiftedShape(StrictPartition outer, StrictPartition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(outer_, inner_))
        throw DomainError("skew shape " + outer_.to_string() + "/" + inner_.to_string() + " needs inner inside outer");
}

std::vector<std::pair<int, int>> SkewShiftedShape::cells() const {
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= outer_.length(); ++i)
        for (int j = inner_[i - 1] + i; j <= outer_[i - 1] + i - 1; ++j) cells.emplace_back(i, j);
    return cells;
}

std::string SkewShiftedShape::to_string() const {
    return inner_.empty() ? outer_.to_string() : outer_.to_string() + "/" + inner_.to_string();
}

bool interlaces(const StrictPartition& lam, const StrictPartition& mu) {
    const int l = std::max(lam.length(), mu.length());
    for (int i = 0; i < l; ++i) {
        if (lam[i] < mu[i]) return false;
        if (mu[i] < lam[i + 1]) return false;
    }
    return true;
}

int components(const StrictPartition& lam, const StrictPartition& mu) {
    if (!interlaces(lam, mu))
        throw DomainError(lam.to_string() + " does not interlace " + mu.to_string());
    const int l = lam.length();
    if (l == 0) return 0;
    int a = 0;
    for (int i = 0; i + 1 < l; ++i)
        if (lam[i] > mu[i] && mu[i] > lam[i + 1]) ++a;
    if (lam[l - 1] > mu[l - 1]) ++a;
    return a;
}

int flood_fill_components(const StrictPartition& outer, const StrictPartition& inner) {
    auto cells = SkewShiftedShape(outer, inner).cells();
    std::set<std::pair<int, int>> todo(cells.begin(), cells.end());
    int count = 0;
    while (!todo.empty()) {
        ++count;
        std::vector<std::pair<int, int>> stack{*todo.begin()};
        todo.erase(todo.begin());
        while (!stack.empty()) {
            auto [i, j] = stack.back();
            stack.pop_back();
            const std::pair<int, int> nbrs[] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
            for (const auto& c : nbrs) {
                auto it = todo.find(c);
                if (it == todo.end()) continue;
                stack.push_back(c);
                todo.erase(it);
            }
        }
    }
    return count;
}

int length_drop_indicator(const StrictPartition& mu, const StrictPartition& kappa) {
    return mu.length() > kappa.length() ? 1 : 0;
}

StrictPartition staircase_complement(const StrictPartition& lam, int r) {
    if (r < 0 || lam[0] > r)
        throw DomainError(lam.to_string() + " is not inside the staircase of size " + std::to_string(r));
    std::vector<int> out;
    for (int v = r; v >= 1; --v)
        if (std::find(lam.parts().begin(), lam.parts().end(), v) == lam.parts().end()) out.push_back(v);
    return StrictPartition(out);
}

std::vector<StrictPartition> pieri_kappas(const StrictPartition& mu, const StrictPartition& lam, int r) {
    std::vector<StrictPartition> out;
    const int total = mu.weight() + lam.weight() - r;
    if (r < 0 || total < 0 || total % 2 != 0) return out;
    const int target = total / 2;
    const int l = std::max(mu.length(), lam.length());
    std::vector<int> k(l, 0);
    auto rec = [&](auto&& self, int i, int sum) -> void {
        if (sum > target) return;
        if (i == l) {
            if (sum != target) return;
            std::vector<int> parts;
            for (int v : k)
                if (v > 0) parts.push_back(v);
            out.emplace_back(parts);
            return;
        }
        int lo = std::max(mu[i + 1], lam[i + 1]);
        int hi = std::min(mu[i], lam[i]);
        if (i > 0 && k[i - 1] > 0) hi = std::min(hi, k[i - 1] - 1);
        if (i > 0 && k[i - 1] == 0) hi = std::min(hi, 0);
        for (int v = lo; v <= hi; ++v) {
            k[i] = v;
            self(self, i + 1, sum + v);
        }
        k[i] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void strict_rec(int remaining, int max_part, int max_length, std::vector<int>& cur,
                const std::function<void(const StrictPartition&)>& f) {
    if (remaining == 0) {
        f(StrictPartition(cur));
        return;
    }
    if (static_cast<int>(cur.size()) >= max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // the remaining parts are distinct and < p, so at most p(p-1)/2 more
        if (remaining - p > p * (p - 1) / 2) break;
        cur.push_back(p);
        strict_rec(remaining - p, p - 1, max_length, cur, f);
        cur.pop_back();
    }
}

void partition_rec(int remaining, int max_part, int max_length, std::vector<int>& cur,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) >= max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partition_rec(remaining - p, p, max_length, cur, out);
        cur.pop_back();
    }
}

}  // namespace

void for_each_strict(int max_weight, int max_length, const std::function<void(const StrictPartition&)>& f) {
    std::vector<int> cur;
    for (int w = 0; w <= max_weight; ++w) strict_rec(w, w, max_length, cur, f);
}

std::vector<StrictPartition> enumerate_strict(int max_weight, int max_length) {
    std::vector<StrictPartition> out;
    for_each_strict(max_weight, max_length, [&](const StrictPartition& p) { out.push_back(p); });
    return out;
}

std::vector<StrictPartition> strict_of_weight(int weight) {
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    strict_rec(weight, weight, 1 << 30, cur, [&](const StrictPartition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> partitions_of_weight(int weight, int max_length) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partition_rec(weight, weight, max_length, cur, out);
    return out;
}

std::vector<Partition> enumerate_partitions(int max_weight, int max_length) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto ps = partitions_of_weight(w, max_length);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::vector<StrictPartition> strict_subpartitions(const StrictPartition& lam) {
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int i) -> void {
        out.emplace_back(cur);
        if (i >= lam.length()) return;
        int hi = lam[i];
        if (!cur.empty()) hi = std::min(hi, cur.back() - 1);
        for (int v = 1; v <= hi; ++v) {
            cur.push_back(v);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::stable_sort(out.begin(), out.end(), [](const StrictPartition& a, const StrictPartition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a > b;
    });
    return out;
}

Partition add(const Partition& a, const Partition& b) {
    std::vector<int> p(std::max(a.length(), b.length()));
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
    return Partition(p);
}

}  // namespace sympq
