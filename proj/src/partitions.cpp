#include "qpi/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qpi {

namespace {

std::vector<int> canonical(const std::vector<int>& raw) {
  std::vector<int> relabel(raw.size(), -1);
  std::vector<int> out(raw.size());
  int next = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    int b = raw[i];
    if (relabel[static_cast<size_t>(b)] < 0) relabel[static_cast<size_t>(b)] = next++;
    out[i] = relabel[static_cast<size_t>(b)];
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

SetPartition::SetPartition(int n_, std::vector<int> block_) : n(n_) {
  if (n < 0 || block_.size() != static_cast<size_t>(n))
    throw parameter_error("block assignment length must equal n");
  for (int b : block_)
    if (b < 0 || b >= n) throw parameter_error("block id out of range");
  block = canonical(block_);
}

SetPartition SetPartition::discrete(int n) {
  std::vector<int> b(static_cast<size_t>(n));
  std::iota(b.begin(), b.end(), 0);
  return SetPartition(n, std::move(b));
}

SetPartition SetPartition::full(int n) {
  return SetPartition(n, std::vector<int>(static_cast<size_t>(n), 0));
}

int SetPartition::num_blocks() const {
  return block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(num_blocks()));
  for (int i = 1; i <= n; ++i)
    out[static_cast<size_t>(block[static_cast<size_t>(i) - 1])].push_back(i);
  return out;
}

bool SetPartition::is_noncrossing() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (block[static_cast<size_t>(a)] == block[static_cast<size_t>(c)] &&
              block[static_cast<size_t>(b)] == block[static_cast<size_t>(d)] &&
              block[static_cast<size_t>(a)] != block[static_cast<size_t>(b)])
            return false;
  return true;
}

std::string SetPartition::to_string() const {
  std::string s;
  auto bs = blocks();
  for (size_t bi = 0; bi < bs.size(); ++bi) {
    if (bi) s += '|';
    for (size_t j = 0; j < bs[bi].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(bs[bi][j]);
    }
  }
  return s;
}

SetPartition join(const SetPartition& p, const SetPartition& q) {
  if (p.n != q.n) throw dimension_error("join: sizes differ");
  UnionFind uf(p.n);
  for (int i = 1; i < p.n; ++i)
    for (int j = 0; j < i; ++j) {
      if (p.block[static_cast<size_t>(i)] == p.block[static_cast<size_t>(j)] ||
          q.block[static_cast<size_t>(i)] == q.block[static_cast<size_t>(j)])
        uf.unite(i, j);
    }
  std::vector<int> raw(static_cast<size_t>(p.n));
  for (int i = 0; i < p.n; ++i) raw[static_cast<size_t>(i)] = uf.find(i);
  // roots are arbitrary labels; remap into [0,n) then canonicalize
  std::map<int, int> ids;
  for (int& b : raw) {
    auto [it, _] = ids.emplace(b, static_cast<int>(ids.size()));
    b = it->second;
  }
  return SetPartition(p.n, std::move(raw));
}

bool refines(const SetPartition& p, const SetPartition& q) {
  if (p.n != q.n) throw dimension_error("refines: sizes differ");
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      if (p.block[static_cast<size_t>(i)] == p.block[static_cast<size_t>(j)] &&
          q.block[static_cast<size_t>(i)] != q.block[static_cast<size_t>(j)])
        return false;
  return true;
}

std::string Category::name() const {
  switch (tag) {
    case CategoryTag::P: return "P";
    case CategoryTag::P2: return "P2";
    case CategoryTag::Px: return "Px(" + std::to_string(x) + ")";
    case CategoryTag::NC: return "NC";
    case CategoryTag::NC2: return "NC2";
    case CategoryTag::NCx: return "NCx(" + std::to_string(x) + ")";
  }
  return "?";
}

Category parse_category(const std::string& s) {
  if (s == "P") return Category::P();
  if (s == "P2") return Category::P2();
  if (s == "NC") return Category::NC();
  if (s == "NC2") return Category::NC2();
  auto paren = s.find('(');
  if (paren != std::string::npos && s.back() == ')') {
    long x = std::stol(s.substr(paren + 1, s.size() - paren - 2));
    std::string head = s.substr(0, paren);
    if (head == "Px") return Category::Px(x);
    if (head == "NCx") return Category::NCx(x);
  }
  throw parameter_error("unknown category: " + s);
}

namespace {

bool balanced_blocks(const SetPartition& p, const ColoredWord& word, long x) {
  auto bs = p.blocks();
  for (const auto& b : bs) {
    long diff = 0;
    for (int pt : b) diff += word[static_cast<size_t>(pt) - 1];
    if (x == 0) {
      if (diff != 0) return false;  // Z_infinity: exact balance
    } else if (((diff % x) + x) % x != 0) {
      return false;
    }
  }
  return true;
}

bool all_pairs(const SetPartition& p) {
  for (const auto& b : p.blocks())
    if (b.size() != 2) return false;
  return true;
}

}  // namespace

std::vector<SetPartition> enumerate_partitions(
    int n, const Category& cat, const std::optional<ColoredWord>& word) {
  if (n < 0) throw parameter_error("enumerate_partitions: n >= 0 required");
  if (n == 0) return {SetPartition(0, {})};  // the empty partition
  if (cat.colored()) {
    if (!word) throw parameter_error("colored family needs a word");
    if (word->size() != static_cast<size_t>(n))
      throw parameter_error("word length must equal n");
    if (cat.x < 0) throw parameter_error("x must be >= 1");
  }
  std::vector<SetPartition> out;
  // restricted growth strings
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  while (true) {
    SetPartition p(n, rgs);
    bool ok = true;
    if (!cat.crossing_allowed() && !p.is_noncrossing()) ok = false;
    if (ok && (cat.tag == CategoryTag::P2 || cat.tag == CategoryTag::NC2))
      ok = all_pairs(p);
    if (ok && cat.colored()) ok = balanced_blocks(p, *word, cat.x);
    if (ok) out.push_back(std::move(p));
    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int maxv = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[static_cast<size_t>(i)] <= maxv) break;
    }
    if (i == 0) break;
    ++rgs[static_cast<size_t>(i)];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

std::vector<SetPartition> interval(const SetPartition& p,
                                   const SetPartition& q, Lattice lattice) {
  if (!refines(p, q)) throw order_error("interval: p does not refine q");
  // coarsen p by merging its blocks inside each block of q
  int nb = p.num_blocks();
  std::vector<int> qb_of_pb(static_cast<size_t>(nb));
  for (int i = 0; i < p.n; ++i)
    qb_of_pb[static_cast<size_t>(p.block[static_cast<size_t>(i)])] =
        q.block[static_cast<size_t>(i)];
  std::vector<SetPartition> out;
  // restricted growth over the blocks of p, constrained within blocks of q
  std::vector<int> rgs(static_cast<size_t>(nb), 0);
  auto emit = [&]() {
    // blocks of p with equal (q-block, rgs) merge
    std::map<std::pair<int, int>, int> ids;
    std::vector<int> raw(static_cast<size_t>(p.n));
    for (int i = 0; i < p.n; ++i) {
      int pb = p.block[static_cast<size_t>(i)];
      auto key = std::make_pair(qb_of_pb[static_cast<size_t>(pb)],
                                rgs[static_cast<size_t>(pb)]);
      auto [it, _] = ids.emplace(key, static_cast<int>(ids.size()));
      raw[static_cast<size_t>(i)] = it->second;
    }
    SetPartition r(p.n, std::move(raw));
    if (lattice == Lattice::P || r.is_noncrossing()) out.push_back(std::move(r));
  };
  while (true) {
    emit();
    int i = nb - 1;
    for (; i > 0; --i) {
      int maxv = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[static_cast<size_t>(i)] <= maxv) break;
    }
    if (i == 0) break;
    ++rgs[static_cast<size_t>(i)];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  // dedupe (several growth strings can merge to the same coarsening)
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Int mobius(const SetPartition& p, const SetPartition& q, Lattice lattice) {
  if (!refines(p, q)) throw order_error("mobius: p does not refine q");
  if (lattice == Lattice::NC && (!p.is_noncrossing() || !q.is_noncrossing()))
    throw order_error("mobius: arguments not in NC");
  thread_local std::map<std::tuple<std::vector<int>, std::vector<int>, int>, Int>
      memo;
  auto key = std::make_tuple(p.block, q.block, static_cast<int>(lattice));
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Int val;
  if (p == q) {
    val = 1;
  } else {
    val = 0;
    for (const auto& r : interval(p, q, lattice))
      if (!(r == q)) val -= mobius(p, r, lattice);
  }
  memo.emplace(std::move(key), val);
  return val;
}

}  // namespace qpi
