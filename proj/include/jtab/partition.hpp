#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace jtab {

/* A partition of a nonnegative integer: weakly decreasing positive parts.
 * Constructors normalize (sort descending, strip zeros) and reject negative
 * parts and totals beyond the 10^6 guard.  Values are immutable after
 * construction and usable as map keys.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /* from run-length pairs (value, count), values need not be sorted */
    static Partition from_runs(const std::vector<std::pair<int, int>>& runs);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long total() const { return n_; }

    /* number of parts equal to i (zero for i not a part) */
    int multiplicity(int i) const;
    /* (value, count) pairs, values strictly decreasing */
    const std::vector<std::pair<int, int>>& runs() const { return runs_; }
    /* distinct part values, decreasing */
    std::vector<int> distinct_parts() const;

    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

    /* prepend extra parts (multiset union), renormalizing */
    Partition unite(const Partition& other) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    std::vector<std::pair<int, int>> runs_;
    long long n_ = 0;

    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/* Key (s_1,...,s_k) of a stable partition, all entries >= 1. */
struct Key {
    std::vector<int> entries;
    friend bool operator==(const Key& a, const Key& b) = default;
};

/* [n]^k: the unique almost rectangular partition of n with k parts. */
Partition almost_rectangular(long long n, int k);

/* largest part - smallest part <= 1 (vacuously true when empty) */
bool is_almost_rectangular(const Partition& p);

/* r_P: least number of almost rectangular subpartitions whose union is P.
 * Greedy interval cover of the distinct-part set from the largest part down.
 */
int r_p(const Partition& p);

/* parts differ pairwise by at least two */
bool is_stable(const Partition& p);

/* Bruhat (dominance) order with min-length truncation: a <= b iff every
 * prefix sum of a is at most the matching prefix sum of b, up to the
 * shorter length.  Both arguments must partition the same total.
 */
bool bruhat_leq(const Partition& a, const Partition& b);
bool bruhat_comparable(const Partition& a, const Partition& b);

/* key of a stable partition: s_i = q_i - q_{i+1} - 1, s_k = q_k */
Key key(const Partition& q);
/* inverse of key: q_i = sum_{j>=i} s_j + k - i; result is stable */
Partition key_to_partition(const Key& s);

/* conjugate (transpose of the Ferrers diagram) */
Partition conjugate(const Partition& p);

/* side of the Durfee square */
int durfee_rank(const Partition& p);

/* diagonal hook lengths h_ii = (p_i - i) + (conj_i - i) + 1, i up to the
 * Durfee rank; always stable
 */
Partition dhl(const Partition& p);

/* Streams every partition of n exactly once in reverse-lexicographic order:
 * first (n), last (1^n).  n = 0 yields only the empty partition.
 *
 *   PartitionStream ps(n);
 *   Partition p;
 *   while (ps.next(p)) { ... }
 */
class PartitionStream {
public:
    explicit PartitionStream(long long n);
    bool next(Partition& out);

private:
    long long n_;
    std::vector<int> cur_;
    bool done_ = false;
    bool first_ = true;
};

/* collects partitions_of(n); prefer PartitionStream for large n */
std::vector<Partition> partitions_of(long long n);

/* every stable partition of n (parts pairwise differing by >= 2),
 * enumerated through their keys
 */
std::vector<Partition> stable_partitions_of(long long n);

/* p(n) by counting the stream; the tests check it against the pentagonal
 * recurrence
 */
long long partition_count(long long n);

/* rendering: plain "(5,4,4,3)" and almost-rectangular "([16]^3,[5]^2)"
 * (greedy maximal AR blocks from the largest part).  parse accepts both
 * plus bare comma lists and value^mult runs.
 */
std::string to_plain_string(const Partition& p);
std::string to_ar_string(const Partition& p);
Partition parse_partition(const std::string& text);

std::string to_string(const Key& k);

} // namespace jtab
