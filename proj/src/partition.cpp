#include "jtab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace jtab {

namespace {
constexpr long long kMaxTotal = 1'000'000;
}

void Partition::normalize() {
    for (int x : parts_) {
        if (x < 0) throw std::domain_error("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
    if (n_ > kMaxTotal) throw std::domain_error("partition total exceeds the 10^6 guard");
    runs_.clear();
    for (int x : parts_) {
        if (!runs_.empty() && runs_.back().first == x)
            runs_.back().second++;
        else
            runs_.emplace_back(x, 1);
    }
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }

Partition Partition::from_runs(const std::vector<std::pair<int, int>>& runs) {
    std::vector<int> parts;
    for (auto [v, c] : runs) {
        if (c < 0) throw std::domain_error("negative multiplicity");
        for (int i = 0; i < c; i++) parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const {
    for (auto [v, c] : runs_) {
        if (v == i) return c;
        if (v < i) break;
    }
    return 0;
}

std::vector<int> Partition::distinct_parts() const {
    std::vector<int> out;
    out.reserve(runs_.size());
    for (auto [v, c] : runs_) out.push_back(v);
    return out;
}

Partition Partition::unite(const Partition& other) const {
    std::vector<int> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_plain_string(p); }

Partition almost_rectangular(long long n, int k) {
    if (k < 1 || k > n) throw std::domain_error("almost_rectangular: k out of [1,n]");
    long long q = n / k;
    long long rem = n % k;
    std::vector<int> parts;
    parts.reserve(k);
    for (long long i = 0; i < rem; i++) parts.push_back(static_cast<int>(q + 1));
    for (long long i = rem; i < k; i++) parts.push_back(static_cast<int>(q));
    return Partition(std::move(parts));
}

bool is_almost_rectangular(const Partition& p) {
    return p.empty() || p.largest() - p.smallest() <= 1;
}

int r_p(const Partition& p) {
    auto s = p.distinct_parts();  // decreasing
    int count = 0;
    for (size_t i = 0; i < s.size(); i++) {
        if (i + 1 < s.size() && s[i] - s[i + 1] == 1) i++;  // block {a, a-1}
        count++;
    }
    return count;
}

bool is_stable(const Partition& p) {
    const auto& parts = p.parts();
    for (size_t i = 0; i + 1 < parts.size(); i++)
        if (parts[i] - parts[i + 1] < 2) return false;
    return true;
}

bool bruhat_leq(const Partition& a, const Partition& b) {
    if (a.total() != b.total()) throw std::domain_error("bruhat_leq: totals differ");
    size_t m = std::min(a.parts().size(), b.parts().size());
    long long sa = 0, sb = 0;
    for (size_t i = 0; i < m; i++) {
        sa += a.parts()[i];
        sb += b.parts()[i];
        if (sa > sb) return false;
    }
    return true;
}

bool bruhat_comparable(const Partition& a, const Partition& b) {
    return bruhat_leq(a, b) || bruhat_leq(b, a);
}

Key key(const Partition& q) {
    if (q.empty() || !is_stable(q)) throw std::domain_error("key: partition is not stable");
    const auto& parts = q.parts();
    Key s;
    for (size_t i = 0; i + 1 < parts.size(); i++) s.entries.push_back(parts[i] - parts[i + 1] - 1);
    s.entries.push_back(parts.back());
    return s;
}

Partition key_to_partition(const Key& s) {
    int k = static_cast<int>(s.entries.size());
    for (int e : s.entries)
        if (e < 1) throw std::domain_error("key entries must be >= 1");
    std::vector<int> parts(k);
    long long suffix = 0;
    for (int i = k - 1; i >= 0; i--) {
        suffix += s.entries[i];
        parts[i] = static_cast<int>(suffix + (k - 1 - i));
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols(p.largest(), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; j++) cols[j]++;
    return Partition(std::move(cols));
}

int durfee_rank(const Partition& p) {
    int k = 0;
    for (int i = 0; i < p.size(); i++)
        if (p.parts()[i] >= i + 1) k = i + 1;
    return k;
}

Partition dhl(const Partition& p) {
    if (p.empty()) throw std::domain_error("dhl: empty partition");
    Partition conj = conjugate(p);
    int k = durfee_rank(p);
    std::vector<int> hooks(k);
    for (int i = 0; i < k; i++)
        hooks[i] = (p.parts()[i] - (i + 1)) + (conj.parts()[i] - (i + 1)) + 1;
    return Partition(std::move(hooks));
}

PartitionStream::PartitionStream(long long n) : n_(n) {
    if (n < 0 || n > kMaxTotal) throw std::domain_error("PartitionStream: n out of range");
}

bool PartitionStream::next(Partition& out) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        if (n_ == 0) {
            done_ = true;
            out = Partition();
            return true;
        }
        cur_.assign(1, static_cast<int>(n_));
        out = Partition(cur_);
        return true;
    }
    /* decrement the last part > 1, then redistribute the freed units into
     * parts no larger than it */
    int j = static_cast<int>(cur_.size()) - 1;
    long long rem = 0;
    while (j >= 0 && cur_[j] == 1) {
        rem += 1;
        j--;
    }
    if (j < 0) {
        done_ = true;
        return false;
    }
    cur_[j] -= 1;
    rem += 1;
    cur_.resize(j + 1);
    int cap = cur_[j];
    while (rem > cap) {
        cur_.push_back(cap);
        rem -= cap;
    }
    if (rem > 0) cur_.push_back(static_cast<int>(rem));
    out = Partition(cur_);
    return true;
}

std::vector<Partition> partitions_of(long long n) {
    std::vector<Partition> out;
    PartitionStream ps(n);
    Partition p;
    while (ps.next(p)) out.push_back(p);
    return out;
}

namespace {
void stable_rec(long long rem, int i, int k, std::vector<int>& s, std::vector<Partition>& out) {
    // remaining = sum_{j>=i} j*s_j over entries i..k, each s_j >= 1
    if (i == k) {
        if (rem % k == 0 && rem / k >= 1) {
            s[k - 1] = static_cast<int>(rem / k);
            Key kk{s};
            out.push_back(key_to_partition(kk));
        }
        return;
    }
    long long tail_min = 0;
    for (int j = i + 1; j <= k; j++) tail_min += j;
    for (long long si = 1; i * si + tail_min <= rem; si++) {
        s[i - 1] = static_cast<int>(si);
        stable_rec(rem - i * si, i + 1, k, s, out);
    }
}
}

std::vector<Partition> stable_partitions_of(long long n) {
    std::vector<Partition> out;
    if (n <= 0) return out;
    for (int k = 1;; k++) {
        long long base = static_cast<long long>(k) * (k - 1) / 2;
        long long min_n = base;  // plus sum i*s_i >= k(k+1)/2
        for (int i = 1; i <= k; i++) min_n += i;
        if (min_n > n) break;
        std::vector<int> s(k);
        stable_rec(n - base, 1, k, s, out);
    }
    std::sort(out.begin(), out.end(), std::greater<Partition>());
    return out;
}

long long partition_count(long long n) {
    PartitionStream ps(n);
    Partition p;
    long long c = 0;
    while (ps.next(p)) c++;
    return c;
}

std::string to_plain_string(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < p.size(); i++) {
        if (i) os << ',';
        os << p.parts()[i];
    }
    os << ')';
    return os.str();
}

std::string to_ar_string(const Partition& p) {
    std::ostringstream os;
    os << '(';
    const auto& runs = p.runs();
    bool sep = false;
    for (size_t i = 0; i < runs.size(); i++) {
        long long total = static_cast<long long>(runs[i].first) * runs[i].second;
        int count = runs[i].second;
        if (i + 1 < runs.size() && runs[i].first - runs[i + 1].first == 1) {
            total += static_cast<long long>(runs[i + 1].first) * runs[i + 1].second;
            count += runs[i + 1].second;
            i++;
        }
        if (sep) os << ',';
        sep = true;
        if (count == 1)
            os << total;
        else
            os << '[' << total << "]^" << count;
    }
    os << ')';
    return os.str();
}

namespace {
long long parse_int(const std::string& s, size_t& i) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
    if (i == start) throw std::invalid_argument("parse_partition: expected integer in '" + s + "'");
    return std::stoll(s.substr(start, i - start));
}
}

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ',') {
            i++;
            continue;
        }
        if (s[i] == '[') {
            i++;
            long long total = parse_int(s, i);
            if (i >= s.size() || s[i] != ']') throw std::invalid_argument("parse_partition: missing ']'");
            i++;
            long long count = 1;
            if (i < s.size() && s[i] == '^') {
                i++;
                count = parse_int(s, i);
            }
            Partition block = almost_rectangular(total, static_cast<int>(count));
            parts.insert(parts.end(), block.parts().begin(), block.parts().end());
        } else {
            long long v = parse_int(s, i);
            long long count = 1;
            if (i < s.size() && s[i] == '^') {
                i++;
                count = parse_int(s, i);
            }
            for (long long c = 0; c < count; c++) parts.push_back(static_cast<int>(v));
        }
    }
    return Partition(std::move(parts));
}

std::string to_string(const Key& k) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < k.entries.size(); i++) {
        if (i) os << ',';
        os << k.entries[i];
    }
    os << ')';
    return os.str();
}

} // namespace jtab
