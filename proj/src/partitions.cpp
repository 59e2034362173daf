#include "g1chow/partitions.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <json.hpp>

namespace g1chow {

int subset_size(Subset s) { return std::popcount(s); }

int subset_min(Subset s) {
    if (s == 0) throw PartitionError("empty subset has no minimum");
    return std::countr_zero(s) + 1;
}

Subset full_subset(int n) { return n >= 32 ? ~Subset{0} : ((Subset{1} << n) - 1); }

Subset singleton(int element) {
    if (element < 1 || element > 31) throw PartitionError("element out of range: " + std::to_string(element));
    return Subset{1} << (element - 1);
}

std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

Subset subset_from(const std::vector<int>& elements) {
    Subset s = 0;
    for (int e : elements) {
        Subset b = singleton(e);
        if (s & b) throw PartitionError("repeated element " + std::to_string(e));
        s |= b;
    }
    return s;
}

bool subset_contains(Subset s, int element) { return element >= 1 && element <= 31 && (s & singleton(element)); }

std::string subset_to_string(Subset s) {
    std::string out;
    for (int e : subset_elements(s)) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    }
    return out;
}

std::string subset_to_braced(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

std::strong_ordering subset_lex_compare(Subset a, Subset b) {
    // The first differing element decides; a set that runs out first is smaller.
    while (a && b) {
        Subset la = a & (~a + 1), lb = b & (~b + 1);
        if (la != lb) return la < lb ? std::strong_ordering::less : std::strong_ordering::greater;
        a ^= la;
        b ^= lb;
    }
    if (!a && !b) return std::strong_ordering::equal;
    return a ? std::strong_ordering::greater : std::strong_ordering::less;
}

bool subset_less(Subset a, Subset b) {
    int sa = subset_size(a), sb = subset_size(b);
    if (sa != sb) return sa < sb;
    return subset_lex_compare(a, b) == std::strong_ordering::less;
}

bool incomparable(Subset b, Subset b2) {
    Subset m = b & b2;
    return m != 0 && m != b && m != b2;
}

SetPartition::SetPartition(int n, std::vector<Subset> parts) : n_(n), parts_(std::move(parts)) {
    if (n < 1 || n > kMaxGroundSet) throw PartitionError("ground set size out of range: " + std::to_string(n));
    Subset seen = 0;
    for (Subset p : parts_) {
        if (p == 0) throw PartitionError("empty part");
        if (seen & p) throw PartitionError("parts overlap");
        seen |= p;
    }
    if (seen != full_subset(n)) throw PartitionError("parts do not cover {1.." + std::to_string(n) + "}");
    std::sort(parts_.begin(), parts_.end(), [](Subset a, Subset b) { return (a & (~a + 1)) < (b & (~b + 1)); });
}

SetPartition SetPartition::parse(std::string_view text, int n) {
    std::vector<Subset> parts;
    int largest = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t bar = text.find('|', start);
        std::string chunk(text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
        std::istringstream in(chunk);
        std::vector<int> elems;
        std::string tok;
        while (in >> tok) {
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw PartitionError("bad partition element '" + tok + "'");
            }
            if (pos != tok.size()) throw PartitionError("bad partition element '" + tok + "'");
            elems.push_back(v);
            largest = std::max(largest, v);
        }
        if (elems.empty()) throw PartitionError("empty part in '" + std::string(text) + "'");
        parts.push_back(subset_from(elems));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return SetPartition(n == 0 ? largest : n, std::move(parts));
}

SetPartition SetPartition::discrete(int n) {
    std::vector<Subset> parts;
    for (int i = 1; i <= n; ++i) parts.push_back(singleton(i));
    return SetPartition(n, std::move(parts));
}

SetPartition SetPartition::indiscrete(int n) { return SetPartition(n, {full_subset(n)}); }

std::size_t SetPartition::non_singleton_count() const {
    return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](Subset p) { return subset_size(p) >= 2; }));
}

std::vector<Subset> SetPartition::non_singleton_parts() const {
    std::vector<Subset> out;
    for (Subset p : parts_)
        if (subset_size(p) >= 2) out.push_back(p);
    return out;
}

std::vector<int> SetPartition::shape() const {
    std::vector<int> out;
    for (Subset p : parts_) out.push_back(subset_size(p));
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::size_t SetPartition::part_of(int element) const {
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (subset_contains(parts_[i], element)) return i;
    throw PartitionError("element " + std::to_string(element) + " not in ground set");
}

std::string SetPartition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '|';
        out += subset_to_string(parts_[i]);
    }
    return out;
}

std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.parts_.size(); ++i)
        if (auto c = subset_lex_compare(a.parts_[i], b.parts_[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

std::vector<SetPartition> enumerate_partitions(int n) {
    if (n < 1 || n > 6) throw PartitionError("enumerate_partitions: n must be in 1..6");
    std::vector<SetPartition> out;
    // Restricted growth strings: a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(n, 0);
    while (true) {
        int blocks = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<Subset> parts(blocks, 0);
        for (int i = 0; i < n; ++i) parts[a[i]] |= singleton(i + 1);
        out.emplace_back(n, std::move(parts));

        int i = n - 1;
        for (; i > 0; --i) {
            int mx = *std::max_element(a.begin(), a.begin() + i);
            if (a[i] <= mx) break;
        }
        if (i == 0) break;
        ++a[i];
        for (int j = i + 1; j < n; ++j) a[j] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool refines(const SetPartition& coarse, const SetPartition& fine) {
    if (coarse.n() != fine.n()) throw PartitionError("refines: ground sets differ");
    for (Subset f : fine.parts()) {
        bool inside = false;
        for (Subset c : coarse.parts())
            if ((f & c) == f) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

SetPartition disc_completion(const std::vector<Subset>& blocks, int n) {
    Subset used = 0;
    std::vector<Subset> parts;
    for (Subset b : blocks) {
        if (b & used) throw PartitionError("disc_completion: blocks overlap");
        if (b & ~full_subset(n)) throw PartitionError("disc_completion: block outside ground set");
        used |= b;
        parts.push_back(b);
    }
    for (int i = 1; i <= n; ++i)
        if (!(used & singleton(i))) parts.push_back(singleton(i));
    return SetPartition(n, std::move(parts));
}

SetPartition compose(const SetPartition& p, const SetPartition& s) {
    if (!refines(p, s)) throw PartitionError("compose: " + s.to_string() + " does not refine " + p.to_string());
    std::vector<Subset> groups;
    for (Subset pb : p.parts()) {
        Subset g = 0;
        for (std::size_t a = 0; a < s.length(); ++a)
            if ((s.part(a) & pb) == s.part(a)) g |= singleton(static_cast<int>(a) + 1);
        groups.push_back(g);
    }
    return SetPartition(static_cast<int>(s.length()), std::move(groups));
}

Subset relabel(Subset s, const std::vector<int>& perm) {
    Subset out = 0;
    for (int e : subset_elements(s)) out |= singleton(perm.at(e - 1));
    return out;
}

SetPartition relabel(const SetPartition& s, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != s.n()) throw PartitionError("relabel: permutation size mismatch");
    std::vector<Subset> parts;
    for (Subset p : s.parts()) parts.push_back(relabel(p, perm));
    return SetPartition(s.n(), std::move(parts));
}

QSpec QSpec::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw PartitionError(std::string("Q-spec JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("allowed")) throw PartitionError("Q-spec JSON needs \"n\" and \"allowed\"");
    QSpec q;
    q.n = j.at("n").get<int>();
    for (const auto& part_list : j.at("allowed")) {
        std::vector<Subset> parts;
        for (const auto& part : part_list) parts.push_back(subset_from(part.get<std::vector<int>>()));
        q.allowed.insert(SetPartition(q.n, std::move(parts)));
    }
    return q;
}

std::string QSpec::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["convention"] = convention;
    j["allowed"] = nlohmann::json::array();
    for (const auto& s : allowed) {
        nlohmann::json parts = nlohmann::json::array();
        for (Subset p : s.parts()) parts.push_back(subset_elements(p));
        j["allowed"].push_back(parts);
    }
    return j.dump();
}

QValidation validate_qspec(const QSpec& q) {
    QValidation r;
    auto fail = [&](std::string msg) {
        r.valid = false;
        r.problems.push_back(std::move(msg));
    };
    if (q.n < 1 || q.n > 6) {
        fail("n out of range");
        return r;
    }
    for (const auto& s : q.allowed)
        if (s.n() != q.n) fail("partition " + s.to_string() + " has the wrong ground set");
    if (!r.valid) return r;
    if (q.allows(SetPartition::discrete(q.n))) fail("the discrete partition " + SetPartition::discrete(q.n).to_string() + " may not be allowed");
    auto all = enumerate_partitions(q.n);
    for (const auto& s : q.allowed)
        for (const auto& coarser : all)
            if (coarser != s && refines(coarser, s) && !q.allows(coarser))
                fail("not closed under coarsening: " + s.to_string() + " allowed but " + coarser.to_string() + " missing");
    return r;
}

QSpec dm_space(int n) {
    if (n < 1 || n > 6) throw PartitionError("dm_space: n out of range");
    return QSpec{n, {}};
}

QSpec smyth(int n, int m) {
    if (n < 1 || n > 6) throw PartitionError("smyth: n out of range");
    if (m < 0 || m > n - 1) throw PartitionError("smyth: m must lie in 0.." + std::to_string(n - 1));
    QSpec q{n, {}};
    for (auto& s : enumerate_partitions(n))
        if (static_cast<int>(s.length()) <= m) q.allowed.insert(s);
    return q;
}

QSpec lp_minimal(int n) { return smyth(n, n - 1); }

}  // namespace g1chow
