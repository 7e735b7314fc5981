#include "quiver/quiver.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace quiver {

namespace {

// Finds one directed cycle among the vertices Kahn's algorithm could not
// remove. Every such vertex keeps in-degree >= 1 within that subgraph, so a
// backward walk must revisit a vertex; the revisited segment is a cycle.
std::vector<std::string> find_cycle(const std::vector<std::string>& vertices,
                                    const std::vector<Arrow>& arrows,
                                    const std::vector<bool>& removed,
                                    const std::map<std::string, std::size_t>& vindex) {
  std::size_t n = vertices.size();
  std::vector<long long> prev(n, -1);
  for (const auto& a : arrows) {
    std::size_t t = vindex.at(a.tail), h = vindex.at(a.head);
    if (!removed[t] && !removed[h] && prev[h] < 0) prev[h] = (long long)t;
  }
  std::size_t start = 0;
  while (start < n && removed[start]) ++start;
  std::vector<long long> seen_at(n, -1);
  std::vector<std::size_t> walk;
  std::size_t cur = start;
  while (seen_at[cur] < 0) {
    seen_at[cur] = (long long)walk.size();
    walk.push_back(cur);
    cur = (std::size_t)prev[cur];
  }
  std::vector<std::string> cycle;
  for (std::size_t k = walk.size(); k-- > (std::size_t)seen_at[cur];) {
    cycle.push_back(vertices[walk[k]]);
  }
  return cycle;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_lookup_.emplace(vertices_[i], i).second) {
      throw DuplicateIdError("duplicate vertex id '" + vertices_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (!arrow_lookup_.emplace(a.id, i).second) {
      throw DuplicateIdError("duplicate arrow id '" + a.id + "'");
    }
    if (!vertex_lookup_.count(a.tail)) {
      throw DanglingIdError("arrow '" + a.id + "' has unknown tail '" +
                            a.tail + "'");
    }
    if (!vertex_lookup_.count(a.head)) {
      throw DanglingIdError("arrow '" + a.id + "' has unknown head '" +
                            a.head + "'");
    }
  }

  std::size_t n = vertices_.size();
  out_arrows_.assign(n, {});
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    out_arrows_[vertex_lookup_.at(arrows_[i].tail)].push_back(i);
  }
  for (auto& out : out_arrows_) {
    std::sort(out.begin(), out.end(), [this](std::size_t a, std::size_t b) {
      return arrows_[a].id < arrows_[b].id;
    });
  }

  // Kahn's algorithm; ties broken by vertex order so the result is stable.
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& a : arrows_) ++indegree[vertex_lookup_.at(a.head)];
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.insert(i);
  }
  std::vector<bool> removed(n, false);
  topo_pos_.assign(n, 0);
  while (!ready.empty()) {
    std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    removed[v] = true;
    topo_pos_[v] = topo_order_.size();
    topo_order_.push_back(vertices_[v]);
    for (std::size_t ai : out_arrows_[v]) {
      std::size_t h = vertex_lookup_.at(arrows_[ai].head);
      if (--indegree[h] == 0) ready.insert(h);
    }
  }
  if (topo_order_.size() != n) {
    auto cycle = find_cycle(vertices_, arrows_, removed, vertex_lookup_);
    std::ostringstream msg;
    msg << "directed cycle:";
    for (const auto& v : cycle) msg << ' ' << v;
    throw CycleError(msg.str());
  }

  // Connectedness of the underlying undirected graph (warning only).
  if (n > 0) {
    std::vector<std::vector<std::size_t>> und(n);
    for (const auto& a : arrows_) {
      std::size_t t = vertex_lookup_.at(a.tail), h = vertex_lookup_.at(a.head);
      und[t].push_back(h);
      und[h].push_back(t);
    }
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t u : und[v]) {
        if (!seen[u]) {
          seen[u] = true;
          ++count;
          queue.push_back(u);
        }
      }
    }
    connected_ = count == n;
  }
}

std::size_t Quiver::vertex_index(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) {
    throw DanglingIdError("unknown vertex '" + id + "'");
  }
  return it->second;
}

std::size_t Quiver::arrow_index(const std::string& id) const {
  auto it = arrow_lookup_.find(id);
  if (it == arrow_lookup_.end()) {
    throw DanglingIdError("unknown arrow '" + id + "'");
  }
  return it->second;
}

bool Quiver::has_vertex(const std::string& id) const {
  return vertex_lookup_.count(id) > 0;
}

long long Quiver::arrow_count(std::size_t x, std::size_t y) const {
  long long count = 0;
  for (std::size_t ai : out_arrows_[x]) {
    if (vertex_lookup_.at(arrows_[ai].head) == y) ++count;
  }
  return count;
}

std::vector<std::string> validate_quiver(const Quiver& q, bool* connected) {
  if (connected) *connected = q.is_connected();
  return q.topological_order();
}

DimensionVector::DimensionVector(const Quiver& q,
                                 const std::map<std::string, long long>& v) {
  values_.resize(q.num_vertices());
  std::size_t used = 0;
  for (const auto& [id, value] : v) {
    if (!q.has_vertex(id)) {
      throw DanglingIdError("dimension for unknown vertex '" + id + "'");
    }
    if (value < 0) {
      throw QuiverError("negative dimension at vertex '" + id + "'");
    }
    values_[q.vertex_index(id)] = value;
    ++used;
  }
  if (used != q.num_vertices()) {
    throw QuiverError("dimension vector must cover every vertex");
  }
}

DimensionVector DimensionVector::from_values(std::vector<long long> values) {
  for (long long v : values) {
    if (v < 0) throw QuiverError("negative dimension");
  }
  return DimensionVector(std::move(values));
}

std::vector<std::size_t> DimensionVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != 0) s.push_back(i);
  }
  return s;
}

Weight::Weight(const Quiver& q, const std::map<std::string, long long>& v) {
  values_.resize(q.num_vertices());
  std::size_t used = 0;
  for (const auto& [id, value] : v) {
    if (!q.has_vertex(id)) {
      throw DanglingIdError("weight for unknown vertex '" + id + "'");
    }
    values_[q.vertex_index(id)] = value;
    ++used;
  }
  if (used != q.num_vertices()) {
    throw QuiverError("weight must cover every vertex");
  }
}

Weight Weight::from_values(std::vector<long long> values) {
  return Weight(std::move(values));
}

long long Weight::dot(const DimensionVector& beta) const {
  if (beta.size() != values_.size()) {
    throw DimensionMismatch("weight/dimension length mismatch");
  }
  long long sum = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    sum += values_[i] * beta[i];
  }
  return sum;
}

Weight Weight::scaled(long long n) const {
  std::vector<long long> scaled = values_;
  for (auto& v : scaled) v *= n;
  return Weight(std::move(scaled));
}

bool Weight::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](long long v) { return v == 0; });
}

Path::Path(const Quiver& q, std::vector<std::string> arrow_ids)
    : arrow_ids_(std::move(arrow_ids)) {
  if (arrow_ids_.empty()) {
    throw QuiverError("path must have length >= 1");
  }
  const Arrow& first = q.arrows()[q.arrow_index(arrow_ids_.front())];
  source_ = first.tail;
  std::string at = first.head;
  for (std::size_t k = 1; k < arrow_ids_.size(); ++k) {
    const Arrow& a = q.arrows()[q.arrow_index(arrow_ids_[k])];
    if (a.tail != at) {
      throw QuiverError("arrows '" + arrow_ids_[k - 1] + "' and '" +
                        arrow_ids_[k] + "' do not compose");
    }
    at = a.head;
  }
  target_ = at;
}

LinearCombination::LinearCombination(const Quiver& q,
                                     std::vector<PathTerm> terms)
    : terms_(std::move(terms)) {
  for (std::size_t k = 1; k < terms_.size(); ++k) {
    if (terms_[k].path.source() != terms_[0].path.source() ||
        terms_[k].path.target() != terms_[0].path.target()) {
      throw QuiverError("combination mixes non-parallel paths");
    }
  }
  (void)q;
}

const std::string& LinearCombination::source() const {
  if (terms_.empty()) throw QuiverError("empty combination has no source");
  return terms_.front().path.source();
}

const std::string& LinearCombination::target() const {
  if (terms_.empty()) throw QuiverError("empty combination has no target");
  return terms_.front().path.target();
}

Relation::Relation(const Quiver& q, std::vector<PathTerm> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty()) throw QuiverError("relation must be nonempty");
  for (const auto& t : terms_) {
    if (t.path.length() < 2) {
      throw QuiverError("relation paths must have length >= 2");
    }
  }
  for (std::size_t k = 1; k < terms_.size(); ++k) {
    if (terms_[k].path.source() != terms_[0].path.source() ||
        terms_[k].path.target() != terms_[0].path.target()) {
      throw QuiverError("relation mixes non-parallel paths");
    }
  }
  source_ = terms_.front().path.source();
  target_ = terms_.front().path.target();
  (void)q;
}

std::vector<Path> enumerate_paths(const Quiver& q, const std::string& source,
                                  const std::string& target) {
  std::size_t src = q.vertex_index(source);
  std::size_t dst = q.vertex_index(target);

  // Depth-first search trying outgoing arrows in id order produces paths in
  // lexicographic arrow-id-sequence order; in a DAG no path revisits the
  // target, so recording on arrival loses nothing.
  std::vector<Path> result;
  std::vector<std::string> stack;
  auto dfs = [&](auto&& self, std::size_t at) -> void {
    if (at == dst && !stack.empty()) {
      result.emplace_back(q, stack);
      return;
    }
    for (std::size_t ai : q.arrows_from(at)) {
      const Arrow& a = q.arrows()[ai];
      stack.push_back(a.id);
      self(self, q.vertex_index(a.head));
      stack.pop_back();
    }
  };
  dfs(dfs, src);
  return result;
}

}  // namespace quiver
