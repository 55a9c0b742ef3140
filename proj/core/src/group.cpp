#include "fcg/group.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace fcg {

std::string to_string(Backend b) {
  return b == Backend::FinitePermutation ? "finite-permutation" : "affine";
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  if (e.backend() == Backend::FinitePermutation) return PermHash{}(e.perm());
  std::size_t h = 1469598103934665603ull ^ e.affine().finite;
  for (Int x : e.affine().translation) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

namespace detail {

struct FiniteData {
  FinitePermDescriptor desc;
  Bsgs bsgs;
};

// Finite part F of an affine group, fully enumerated.
struct AffineData {
  AffineDescriptor desc;
  std::vector<Perm> elements;  // sorted
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  std::vector<std::uint32_t> inverse;
  std::vector<std::uint32_t> table;  // |F| x |F| products
  std::vector<Matrix> rho;
  std::uint32_t identity = 0;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[a * elements.size() + b]; }
};

struct GroupData {
  std::string name;
  std::variant<FiniteData, AffineData> backend;
};

}  // namespace detail

namespace {

constexpr std::size_t kMaxFinitePart = 1024;

void validate_finite(const FinitePermDescriptor& d) {
  if (d.degree == 0) throw InputError("permutation degree must be positive");
  if (!d.generator_names.empty() && d.generator_names.size() != d.generators.size())
    throw InputError("generator names and generators differ in count");
  for (const auto& g : d.generators)
    if (g.degree() != d.degree)
      throw InputError("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                       std::to_string(d.degree));
}

std::vector<std::string> default_names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

}  // namespace

Group Group::finite(FinitePermDescriptor desc, std::string name) {
  validate_finite(desc);
  if (desc.generator_names.empty()) desc.generator_names = default_names("g", desc.generators.size());
  detail::FiniteData fd{desc, Bsgs(desc.degree, desc.generators)};
  return Group(std::make_shared<detail::GroupData>(detail::GroupData{std::move(name), std::move(fd)}));
}

Group Group::affine(AffineDescriptor desc, std::string name) {
  validate_finite(desc.finite_part);
  auto& fp = desc.finite_part;
  if (fp.generator_names.empty()) fp.generator_names = default_names("f", fp.generators.size());
  if (desc.translation_names.empty()) desc.translation_names = default_names("t", desc.rank);
  if (desc.translation_names.size() != desc.rank) throw InputError("translation names must match the rank");
  if (desc.action.size() != fp.generators.size())
    throw InputError("action must give one matrix per finite-part generator");
  for (std::size_t i = 0; i < desc.action.size(); ++i) {
    const Matrix& m = desc.action[i];
    if (m.rows() != desc.rank || m.cols() != desc.rank)
      throw InputError("action matrix for '" + fp.generator_names[i] + "' is not " +
                       std::to_string(desc.rank) + "x" + std::to_string(desc.rank));
    Int det = determinant(m);
    if (det != 1 && det != -1)
      throw InputError("action matrix for '" + fp.generator_names[i] + "' has determinant " +
                       std::to_string(det) + ", not invertible over the integers");
  }

  detail::AffineData ad;
  Bsgs bsgs(fp.degree, fp.generators);
  if (bsgs.order() > kMaxFinitePart)
    throw InputError("finite part of order " + std::to_string(bsgs.order()) + " exceeds the supported " +
                     std::to_string(kMaxFinitePart));
  ad.elements = bsgs.elements();
  const std::size_t n = ad.elements.size();
  for (std::uint32_t i = 0; i < n; ++i) ad.index.emplace(ad.elements[i], i);
  ad.identity = ad.index.at(Perm::identity(fp.degree));
  ad.table.resize(n * n);
  ad.inverse.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    ad.inverse[a] = ad.index.at(ad.elements[a].inverse());
    for (std::uint32_t b = 0; b < n; ++b) ad.table[a * n + b] = ad.index.at(ad.elements[a] * ad.elements[b]);
  }

  // rho(x * s) = rho(x) rho(s) along every Cayley-graph edge; a conflict
  // means the generator matrices do not define a homomorphism.
  std::vector<std::optional<Matrix>> rho(n);
  rho[ad.identity] = Matrix::identity(desc.rank);
  std::vector<std::uint32_t> queue{ad.identity};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::uint32_t x = queue[k];
    for (std::size_t s = 0; s < fp.generators.size(); ++s) {
      const std::uint32_t y = ad.mul(x, ad.index.at(fp.generators[s]));
      Matrix m = *rho[x] * desc.action[s];
      if (!rho[y]) {
        rho[y] = std::move(m);
        queue.push_back(y);
      } else if (!(*rho[y] == m)) {
        throw InputError("action is not a homomorphism: relation through generator '" +
                         fp.generator_names[s] + "' at " + ad.elements[y].cycle_string() + " gives " +
                         m.to_string() + " and " + rho[y]->to_string());
      }
    }
  }
  for (auto& m : rho) ad.rho.push_back(std::move(*m));
  ad.desc = std::move(desc);
  return Group(std::make_shared<detail::GroupData>(detail::GroupData{std::move(name), std::move(ad)}));
}

namespace {
const detail::FiniteData& fin(const std::shared_ptr<const detail::GroupData>& d) {
  if (auto p = std::get_if<detail::FiniteData>(&d->backend)) return *p;
  throw InputError("operation requires the finite-permutation backend");
}
const detail::AffineData& aff(const std::shared_ptr<const detail::GroupData>& d) {
  if (auto p = std::get_if<detail::AffineData>(&d->backend)) return *p;
  throw InputError("operation requires the affine backend");
}
}  // namespace

Backend Group::backend() const noexcept {
  return std::holds_alternative<detail::FiniteData>(data_->backend) ? Backend::FinitePermutation
                                                                   : Backend::Affine;
}

const std::string& Group::name() const noexcept { return data_->name; }

Element Group::identity() const {
  if (backend() == Backend::FinitePermutation) return Perm::identity(fin(data_).desc.degree);
  const auto& a = aff(data_);
  return AffineElement{Vector(a.desc.rank, 0), a.identity};
}

bool Group::owns(const Element& e) const noexcept {
  if (e.backend() != backend()) return false;
  if (backend() == Backend::FinitePermutation) return e.perm().degree() == fin(data_).desc.degree;
  const auto& a = aff(data_);
  return e.affine().translation.size() == a.desc.rank && e.affine().finite < a.elements.size();
}

void Group::require_owned(const Element& e) const {
  if (e.backend() != backend())
    throw InputError("element of the " + to_string(e.backend()) + " backend used in a " +
                     to_string(backend()) + " group");
  if (!owns(e)) throw InputError("element does not belong to group '" + name() + "'");
}

Element Group::multiply(const Element& x, const Element& y) const {
  require_owned(x);
  require_owned(y);
  if (backend() == Backend::FinitePermutation) return x.perm() * y.perm();
  // (w, g)(v, f) = (w + rho(g) v, g f)
  const auto& a = aff(data_);
  const auto& l = x.affine();
  const auto& r = y.affine();
  return AffineElement{add(l.translation, a.rho[l.finite].apply(r.translation)), a.mul(l.finite, r.finite)};
}

Element Group::inverse(const Element& x) const {
  require_owned(x);
  if (backend() == Backend::FinitePermutation) return x.perm().inverse();
  // (v, f)^-1 = (-rho(f^-1) v, f^-1)
  const auto& a = aff(data_);
  const std::uint32_t finv = a.inverse[x.affine().finite];
  return AffineElement{scale(a.rho[finv].apply(x.affine().translation), -1), finv};
}

Element Group::conjugate(const Element& g, const Element& h) const {
  return multiply(multiply(inverse(h), g), h);
}

Element Group::commutator(const Element& g, const Element& h) const {
  return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

Element Group::power(const Element& g, long long n) const {
  Element base = n < 0 ? inverse(g) : g;
  unsigned long long k = n < 0 ? 0ull - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  Element result = identity();
  while (k) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<Element> Group::generators() const {
  std::vector<Element> out;
  if (backend() == Backend::FinitePermutation) {
    for (const auto& g : fin(data_).desc.generators) out.emplace_back(g);
    return out;
  }
  const auto& a = aff(data_);
  for (std::size_t i = 0; i < a.desc.rank; ++i) {
    Vector v(a.desc.rank, 0);
    v[i] = 1;
    out.emplace_back(AffineElement{v, a.identity});
  }
  for (const auto& g : a.desc.finite_part.generators)
    out.emplace_back(AffineElement{Vector(a.desc.rank, 0), a.index.at(g)});
  return out;
}

std::vector<std::string> Group::generator_names() const {
  if (backend() == Backend::FinitePermutation) return fin(data_).desc.generator_names;
  const auto& a = aff(data_);
  std::vector<std::string> out = a.desc.translation_names;
  for (const auto& n : a.desc.finite_part.generator_names) out.push_back(n);
  return out;
}

std::string Group::format(const Element& e) const {
  require_owned(e);
  if (backend() == Backend::FinitePermutation) return e.perm().cycle_string();
  std::ostringstream os;
  const auto& v = e.affine().translation;
  os << '(';
  if (v.size() == 1) {
    os << v[0];
  } else {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
  }
  os << ", " << aff(data_).elements[e.affine().finite].cycle_string() << ')';
  return os.str();
}

IndexValue Group::order() const {
  if (backend() == Backend::FinitePermutation) return IndexValue::finite(fin(data_).bsgs.order());
  const auto& a = aff(data_);
  if (a.desc.rank > 0) return IndexValue::infinite();
  return IndexValue::finite(a.elements.size());
}

std::size_t Group::degree() const { return fin(data_).desc.degree; }
const Bsgs& Group::bsgs() const { return fin(data_).bsgs; }

std::size_t Group::rank() const { return aff(data_).desc.rank; }
const FinitePermDescriptor& Group::finite_part_descriptor() const { return aff(data_).desc.finite_part; }
std::size_t Group::finite_order() const { return aff(data_).elements.size(); }
const Perm& Group::finite_element(std::uint32_t index) const { return aff(data_).elements.at(index); }

std::uint32_t Group::finite_index(const Perm& p) const {
  const auto& a = aff(data_);
  auto it = a.index.find(p);
  if (it == a.index.end()) throw InputError("permutation " + p.cycle_string() + " is not in the finite part");
  return it->second;
}

std::uint32_t Group::finite_identity() const { return aff(data_).identity; }
std::uint32_t Group::finite_multiply(std::uint32_t x, std::uint32_t y) const { return aff(data_).mul(x, y); }
std::uint32_t Group::finite_inverse(std::uint32_t x) const { return aff(data_).inverse.at(x); }
const Matrix& Group::action(std::uint32_t finite_index) const { return aff(data_).rho.at(finite_index); }

Element Group::translation(Vector v) const { return affine_element(std::move(v), finite_identity()); }

Element Group::affine_element(Vector v, std::uint32_t finite_index) const {
  const auto& a = aff(data_);
  if (v.size() != a.desc.rank) throw InputError("translation vector has the wrong length");
  if (finite_index >= a.elements.size()) throw InputError("finite-part index out of range");
  return AffineElement{std::move(v), finite_index};
}

}  // namespace fcg
