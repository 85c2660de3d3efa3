#include "core/complex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_set>

#include "util/error.hpp"

namespace xf {

namespace {
constexpr size_t kFaceEnumCap = size_t(1) << 20;
}

long long FVector::euler() const {
  long long e = 0;
  for (size_t k = 1; k < counts.size(); ++k) {
    e += (k % 2 ? 1 : -1) * counts[k];
  }
  return e;
}

std::string FVector::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(counts[i]);
  }
  return s + ")";
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> faces) {
  // Absorb dominated faces: keep only inclusion-maximal ones.
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.card() != b.card()) return a.card() > b.card();
    return a < b;
  });
  SimplicialComplex c;
  for (const auto& f : faces) {
    bool dominated = false;
    for (const auto& kept : c.facets_) {
      if (f.subset_of(kept)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) c.facets_.push_back(f);
  }
  std::sort(c.facets_.begin(), c.facets_.end());
  std::vector<VertexId> vs;
  for (const auto& f : c.facets_) vs.insert(vs.end(), f.begin(), f.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  c.vertices_ = std::move(vs);
  return c;
}

std::optional<int> SimplicialComplex::dim() const {
  if (facets_.empty()) return std::nullopt;
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.dim());
  return d;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  int d = *dim();
  for (const auto& f : facets_)
    if (f.dim() != d) return false;
  return true;
}

bool SimplicialComplex::has_face(const Face& f) const {
  if (facets_.empty()) return false;
  if (f.empty()) return true;
  for (const auto& g : facets_)
    if (f.subset_of(g)) return true;
  return false;
}

bool SimplicialComplex::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

const std::vector<std::vector<Face>>& SimplicialComplex::all_faces() const {
  std::lock_guard<std::mutex> lock(memo_->mx);
  if (!memo_->table) {
    auto table = std::make_shared<std::vector<std::vector<Face>>>();
    std::unordered_set<Face> seen;
    for (const auto& g : facets_) {
      for (auto& s : all_subsets_of(g)) {
        seen.insert(std::move(s));
        require(seen.size() <= kFaceEnumCap, "face enumeration exceeds the 2^20 cap",
                errc::domain);
      }
    }
    size_t maxc = 0;
    for (const auto& f : seen) maxc = std::max(maxc, f.card());
    table->resize(facets_.empty() ? 0 : maxc + 1);
    for (const auto& f : seen) (*table)[f.card()].push_back(f);
    for (auto& bucket : *table) std::sort(bucket.begin(), bucket.end());
    memo_->table = table;
  }
  return *memo_->table;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int d) const {
  const auto& t = all_faces();
  size_t k = static_cast<size_t>(d + 1);
  if (d < -1 || k >= t.size()) return {};
  return t[k];
}

size_t SimplicialComplex::face_count() const {
  size_t n = 0;
  for (const auto& bucket : all_faces()) n += bucket.size();
  return n;
}

std::string SimplicialComplex::to_text() const {
  std::string out;
  for (const auto& f : facets_) {
    for (size_t i = 0; i < f.card(); ++i) {
      if (i) out += " ";
      out += f.verts()[i].label();
    }
    out += "\n";
  }
  return out;
}

FVector f_vector(const SimplicialComplex& c) {
  FVector fv;
  for (const auto& bucket : c.all_faces()) fv.counts.push_back(static_cast<long long>(bucket.size()));
  return fv;
}

SimplicialComplex link(const SimplicialComplex& c, const Face& f) {
  require(c.has_face(f), "link: face " + f.to_string() + " is not in the complex");
  std::vector<Face> facets;
  for (const auto& g : c.facets()) {
    if (f.subset_of(g)) facets.push_back(g.set_minus(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex closed_star(const SimplicialComplex& c, const Face& f) {
  require(c.has_face(f), "star: face " + f.to_string() + " is not in the complex");
  std::vector<Face> facets;
  for (const auto& g : c.facets()) {
    if (f.subset_of(g)) facets.push_back(g);
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex delete_face(const SimplicialComplex& c, const Face& f) {
  if (f.empty()) return SimplicialComplex();  // deleting ∅ removes everything
  std::vector<Face> facets;
  for (const auto& g : c.facets()) {
    if (!f.subset_of(g)) {
      facets.push_back(g);
    } else {
      for (const auto& v : f) facets.push_back(g.set_minus(v));
    }
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (const auto& v : b.vertices()) {
    require(!a.has_vertex(v), "join: vertex label '" + v.label() +
                                  "' occurs on both sides (pass relabel to allow)");
  }
  if (a.is_void()) return b;
  if (b.is_void()) return a;
  std::vector<Face> facets;
  facets.reserve(a.facet_count() * b.facet_count());
  for (const auto& fa : a.facets())
    for (const auto& fb : b.facets()) facets.push_back(fa.set_union(fb));
  return SimplicialComplex::from_facets(std::move(facets));
}

std::pair<SimplicialComplex, std::vector<std::pair<VertexId, VertexId>>> join_relabel(
    const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<VertexId> colliding;
  for (const auto& v : b.vertices())
    if (a.has_vertex(v)) colliding.push_back(v);
  std::vector<VertexId> used(a.vertices());
  used.insert(used.end(), b.vertices().begin(), b.vertices().end());
  auto fresh = fresh_labels(used, colliding.size());
  std::vector<std::pair<VertexId, VertexId>> map;
  for (size_t i = 0; i < colliding.size(); ++i) map.push_back({colliding[i], fresh[i]});
  return {join(a, relabel(b, map)), map};
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, const std::vector<VertexId>& w) {
  for (const auto& v : w)
    require(c.has_vertex(v), "induced_subcomplex: vertex '" + v.label() + "' is not in the complex");
  std::vector<VertexId> sorted(w);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Face wf(std::move(sorted));
  std::vector<Face> facets;
  for (const auto& g : c.facets()) facets.push_back(g.set_intersect(wf));
  return SimplicialComplex::from_facets(std::move(facets));
}

bool is_subcomplex(const SimplicialComplex& c, const SimplicialComplex& d) {
  for (const auto& f : d.facets())
    if (!c.has_face(f)) return false;
  return true;
}

bool is_induced(const SimplicialComplex& c, const SimplicialComplex& d) {
  require(is_subcomplex(c, d), "is_induced: second argument is not a subcomplex of the first");
  return induced_subcomplex(c, d.vertices()) == d;
}

SimplicialComplex boundary_complex(const SimplicialComplex& c) {
  require(c.is_pure(), "boundary: complex is not pure");
  if (c.is_void() || *c.dim() < 0) return SimplicialComplex();
  std::map<Face, int> ridge_count;
  for (const auto& g : c.facets())
    for (const auto& v : g) ridge_count[g.set_minus(v)]++;
  std::vector<Face> facets;
  for (const auto& [r, n] : ridge_count)
    if (n == 1) facets.push_back(r);
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex cone(VertexId apex, const SimplicialComplex& c) {
  require(!c.has_vertex(apex), "cone: apex '" + apex.label() + "' already a vertex");
  if (c.is_void()) return SimplicialComplex::from_facets({Face({apex})});
  std::vector<Face> facets;
  for (const auto& g : c.facets()) facets.push_back(g.with(apex));
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex relabel(const SimplicialComplex& c,
                          const std::vector<std::pair<VertexId, VertexId>>& map) {
  std::map<VertexId, VertexId> m(map.begin(), map.end());
  std::vector<Face> facets;
  for (const auto& g : c.facets()) {
    std::vector<VertexId> vs;
    vs.reserve(g.card());
    for (const auto& v : g) {
      auto it = m.find(v);
      vs.push_back(it == m.end() ? v : it->second);
    }
    facets.push_back(Face(std::move(vs)));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

std::vector<VertexId> fresh_labels(const std::vector<VertexId>& used, size_t count,
                                   const std::string& stem) {
  std::unordered_set<std::string> taken;
  long long next = 0;
  std::string prefix = "~" + stem;
  for (const auto& v : used) {
    const std::string& l = v.label();
    taken.insert(l);
    if (l.size() > prefix.size() && l.compare(0, prefix.size(), prefix) == 0) {
      bool digits = true;
      for (size_t i = prefix.size(); i < l.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(l[i]))) {
          digits = false;
          break;
        }
      if (digits) next = std::max(next, std::stoll(l.substr(prefix.size())) + 1);
    }
  }
  std::vector<VertexId> out;
  while (out.size() < count) {
    std::string cand = prefix + std::to_string(next++);
    if (taken.count(cand)) continue;
    out.push_back(VertexId::of(cand));
  }
  return out;
}

VertexId fresh_label(const SimplicialComplex& c, const std::string& stem) {
  return fresh_labels(c.vertices(), 1, stem)[0];
}

}  // namespace xf
