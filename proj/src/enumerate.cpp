#include "rdlab/enumerate.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string_view>
#include <unordered_set>

namespace rdlab {

namespace {

// Beyer-Hedetniemi successor over canonical level sequences of rooted
// trees (root at level 1, children blocks in non-increasing order),
// starting from the path and ending at the star.
class RootedSeqGen {
public:
    explicit RootedSeqGen(int n) : seq_(static_cast<std::size_t>(n), 0) {
        for (int i = 0; i < n; ++i) seq_[static_cast<std::size_t>(i)] = static_cast<char>(i + 1);
    }

    const std::string& seq() const { return seq_; }

    bool advance() {
        const int n = static_cast<int>(seq_.size());
        int p = -1;
        for (int i = n - 1; i >= 0; --i) {
            if (seq_[static_cast<std::size_t>(i)] > 2) {
                p = i;
                break;
            }
        }
        if (p < 0) return false;
        int q = p - 1;
        while (seq_[static_cast<std::size_t>(q)] != seq_[static_cast<std::size_t>(p)] - 1) --q;
        for (int i = p; i < n; ++i)
            seq_[static_cast<std::size_t>(i)] = seq_[static_cast<std::size_t>(i - (p - q))];
        return true;
    }

private:
    std::string seq_;
};

// parent[v] for v >= 1: most recent earlier index one level up.
void seq_to_parents(const std::string& seq, std::uint8_t* out, int offset) {
    int last_at[64];
    last_at[static_cast<int>(seq[0])] = offset;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        out[i - 1] = static_cast<std::uint8_t>(last_at[static_cast<int>(seq[i]) - 1]);
        last_at[static_cast<int>(seq[i])] = offset + static_cast<int>(i);
    }
}

// True when the sequence's root is the unique center of the underlying
// free tree: at least two principal subtrees reach the maximum level.
bool root_is_center(const std::string& seq) {
    if (seq.size() == 1) return true;
    char maxlevel = *std::max_element(seq.begin(), seq.end());
    int deep_blocks = 0;
    bool block_deep = false;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i] == 2) {
            deep_blocks += block_deep ? 1 : 0;
            block_deep = false;
        }
        if (seq[i] == maxlevel) block_deep = true;
    }
    deep_blocks += block_deep ? 1 : 0;
    return deep_blocks >= 2;
}

int seq_height(const std::string& seq) {
    return *std::max_element(seq.begin(), seq.end()) - 1;
}

}  // namespace

Tree TreeStream::at(std::size_t idx) const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n_ - 1));
    const std::uint8_t* row = parents_.data() + idx * static_cast<std::size_t>(n_ - 1);
    for (int v = 1; v < n_; ++v) edges.emplace_back(static_cast<int>(row[v - 1]), v);
    return Tree(n_, edges);
}

TreeStream all_trees(int n, int cap) {
    if (n < 1) throw InvalidGraph("all_trees: order must be >= 1");
    if (n > cap)
        throw CapExceeded("all_trees: order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    TreeStream stream;
    stream.n_ = n;
    if (n == 1) {
        stream.count_ = 1;
        return stream;
    }
    const std::size_t stride = static_cast<std::size_t>(n - 1);
    auto emit = [&](const std::uint8_t* row) {
        stream.parents_.insert(stream.parents_.end(), row, row + stride);
        ++stream.count_;
    };

    std::vector<std::uint8_t> row(stride);

    // Unicentral trees: rooted trees on n vertices whose root is the
    // unique center.
    {
        RootedSeqGen gen(n);
        do {
            if (root_is_center(gen.seq())) {
                seq_to_parents(gen.seq(), row.data(), 0);
                emit(row.data());
            }
        } while (gen.advance());
    }

    // Bicentral trees: two rooted halves of equal height joined by the
    // central edge; the unordered pair is represented once.
    std::vector<std::vector<std::string>> by_size_height(static_cast<std::size_t>(n));
    auto halves = [&](int size) -> const std::vector<std::string>& {
        auto& slot = by_size_height[static_cast<std::size_t>(size)];
        if (slot.empty()) {
            RootedSeqGen gen(size);
            do slot.push_back(gen.seq());
            while (gen.advance());
        }
        return slot;
    };
    for (int a = n - 1; 2 * a >= n; --a) {
        const int b = n - a;
        for (const std::string& sa : halves(a)) {
            const int h = seq_height(sa);
            for (const std::string& sb : halves(b)) {
                if (seq_height(sb) != h) continue;
                if (a == b && sa < sb) continue;  // keep pairs with sa >= sb
                seq_to_parents(sa, row.data(), 0);
                row[static_cast<std::size_t>(a) - 1] = 0;  // central edge
                seq_to_parents(sb, row.data() + a, a);
                emit(row.data());
            }
        }
    }

    // Deterministic order: sort by canonical code.
    std::vector<std::size_t> index(stream.count_);
    std::iota(index.begin(), index.end(), 0);
    std::vector<std::string> codes(stream.count_);
    for (std::size_t i = 0; i < stream.count_; ++i) codes[i] = canonical_code(stream.at(i));
    std::sort(index.begin(), index.end(),
              [&](std::size_t x, std::size_t y) { return codes[x] < codes[y]; });
    std::vector<std::uint8_t> sorted(stream.parents_.size());
    for (std::size_t i = 0; i < stream.count_; ++i)
        std::memcpy(sorted.data() + i * stride, stream.parents_.data() + index[i] * stride, stride);
    stream.parents_ = std::move(sorted);
    return stream;
}

namespace {

// Allocation-free canonical code for tiny trees, used in the Pruefer
// dedup loop. Layout mirrors canonical_code_adj.
constexpr int kMaxOracleN = 12;

struct TinyTree {
    int n = 0;
    int deg[kMaxOracleN];
    int adj[kMaxOracleN][kMaxOracleN];

    void clear(int order) {
        n = order;
        std::fill(deg, deg + n, 0);
    }
    void add_edge(int u, int v) {
        adj[u][deg[u]++] = v;
        adj[v][deg[v]++] = u;
    }
};

int tiny_code_rec(const TinyTree& t, int v, int parent, char* out) {
    char bufs[kMaxOracleN][2 * kMaxOracleN + 2];
    int lens[kMaxOracleN];
    int order[kMaxOracleN];
    int k = 0;
    for (int i = 0; i < t.deg[v]; ++i) {
        int w = t.adj[v][i];
        if (w == parent) continue;
        lens[k] = tiny_code_rec(t, w, v, bufs[k]);
        order[k] = k;
        ++k;
    }
    std::sort(order, order + k, [&](int x, int y) {
        return std::string_view(bufs[x], static_cast<std::size_t>(lens[x])) <
               std::string_view(bufs[y], static_cast<std::size_t>(lens[y]));
    });
    int pos = 0;
    out[pos++] = '(';
    for (int i = 0; i < k; ++i) {
        std::memcpy(out + pos, bufs[order[i]], static_cast<std::size_t>(lens[order[i]]));
        pos += lens[order[i]];
    }
    out[pos++] = ')';
    return pos;
}

// Center(s) by leaf peeling on the tiny representation.
int tiny_centers(const TinyTree& t, int centers[2]) {
    int deg[kMaxOracleN];
    std::copy(t.deg, t.deg + t.n, deg);
    int cur[kMaxOracleN], next[kMaxOracleN];
    int cn = 0;
    for (int v = 0; v < t.n; ++v)
        if (deg[v] <= 1) cur[cn++] = v;
    int removed = 0;
    while (removed + cn < t.n) {
        removed += cn;
        int nn = 0;
        for (int i = 0; i < cn; ++i) {
            int v = cur[i];
            for (int j = 0; j < t.deg[v]; ++j) {
                int w = t.adj[v][j];
                if (--deg[w] == 1) next[nn++] = w;
            }
        }
        std::copy(next, next + nn, cur);
        cn = nn;
    }
    centers[0] = cur[0];
    if (cn == 2) centers[1] = cur[1];
    return cn;
}

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view sv) const { return std::hash<std::string_view>{}(sv); }
    std::size_t operator()(const std::string& s) const {
        return std::hash<std::string_view>{}(s);
    }
};

}  // namespace

std::uint64_t count_trees_labeled_oracle(int n, int cap) {
    if (n < 1) throw InvalidGraph("count_trees_labeled_oracle: order must be >= 1");
    if (n > cap || n > kMaxOracleN)
        throw CapExceeded("count_trees_labeled_oracle: order " + std::to_string(n) +
                          " exceeds cap " + std::to_string(std::min(cap, kMaxOracleN)));
    if (n <= 2) return 1;

    std::unordered_set<std::string, StringHash, std::equal_to<>> classes;
    int seq[kMaxOracleN];
    std::fill(seq, seq + (n - 2), 0);
    TinyTree t;
    char code[2 * kMaxOracleN + 2];
    char other[2 * kMaxOracleN + 2];

    for (;;) {
        // Decode the Pruefer sequence (linear pointer scan).
        t.clear(n);
        int deg[kMaxOracleN];
        std::fill(deg, deg + n, 1);
        for (int i = 0; i < n - 2; ++i) ++deg[seq[i]];
        int ptr = 0, leaf = -1;
        for (int i = 0; i < n - 2; ++i) {
            int x = seq[i];
            if (leaf < 0) {
                while (deg[ptr] != 1) ++ptr;
                leaf = ptr++;
            }
            t.add_edge(leaf, x);
            deg[leaf] = 0;
            if (--deg[x] == 1 && x < ptr)
                leaf = x;
            else
                leaf = -1;
        }
        int ends[2];
        int ne = 0;
        for (int v = 0; v < n && ne < 2; ++v)
            if (deg[v] == 1) ends[ne++] = v;
        t.add_edge(ends[0], ends[1]);

        // Canonical code at the center(s).
        int centers[2];
        int cn = tiny_centers(t, centers);
        int len = tiny_code_rec(t, centers[0], -1, code);
        if (cn == 2) {
            int len2 = tiny_code_rec(t, centers[1], -1, other);
            if (std::string_view(other, static_cast<std::size_t>(len2)) <
                std::string_view(code, static_cast<std::size_t>(len))) {
                std::memcpy(code, other, static_cast<std::size_t>(len2));
                len = len2;
            }
        }
        std::string_view key(code, static_cast<std::size_t>(len));
        if (classes.find(key) == classes.end()) classes.emplace(key);

        // Next sequence (odometer over [0, n)^(n-2)).
        int pos = n - 3;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return classes.size();
}

}  // namespace rdlab
