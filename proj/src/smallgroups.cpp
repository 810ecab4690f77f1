#include "sympinv/smallgroups.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <sstream>
#include <thread>

namespace sympinv {

std::uint64_t symplectic_group_order(int n, std::int64_t q) {
  const auto sat = std::numeric_limits<std::uint64_t>::max();
  auto mul = [&](std::uint64_t a, std::uint64_t b) { return (b != 0 && a > sat / b) ? sat : a * b; };
  const auto uq = static_cast<std::uint64_t>(q);
  std::uint64_t out = 1;
  for (int i = 0; i < n * n; ++i) out = mul(out, uq);
  std::uint64_t qq = 1;
  for (int i = 1; i <= n; ++i) {
    qq = mul(qq, mul(uq, uq));
    out = mul(out, qq == sat ? sat : qq - 1);
  }
  return out;
}

namespace {

Mat transvection_block(const Field& f, int n, const Mat& s) {
  const auto un = static_cast<std::size_t>(n);
  return block2x2(Mat::identity(f, un), s, Mat::zero(f, un, un), Mat::identity(f, un));
}

Scalar primitive_root(const Field& f) {
  const std::int64_t p = f.p();
  for (const auto& g : field_elements(f)) {
    if (g.is_zero()) continue;
    std::int64_t ord = 1;
    Scalar x = g;
    while (!x.is_one()) {
      x *= g;
      ++ord;
    }
    if (ord == p - 1) return g;
  }
  throw Error("no primitive root");
}

std::vector<Mat> standard_generators(const Field& f, int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<Mat> gens{Mat::standard_symplectic(f, un)};
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i; j < un; ++j) {
      Mat s = Mat::zero(f, un, un);
      s(i, j) = s(j, i) = Scalar::one(f);
      gens.push_back(transvection_block(f, n, s));
    }
  auto levi = [&](const Mat& a) { gens.push_back(direct_sum(a, inverse(a).transpose())); };
  Mat d = Mat::identity(f, un);
  d(0, 0) = primitive_root(f);
  levi(d);
  for (std::size_t i = 0; i + 1 < un; ++i) {
    Mat e = Mat::identity(f, un);
    e(i, i + 1) = Scalar::one(f);
    levi(e);
    Mat e2 = Mat::identity(f, un);
    e2(i + 1, i) = Scalar::one(f);
    levi(e2);
  }
  return gens;
}

}  // namespace

GroupTable::GroupTable(int n, std::int64_t q, std::uint64_t cap) : n_(n), q_(q), field_(Field::prime(q)) {
  if (n < 1) throw DomainError("GroupTable: n must be positive");
  if (q > 255) throw UnsupportedField("GroupTable: q must be below 256");
  const std::uint64_t expected = symplectic_group_order(n, q);
  if (expected > cap) throw BudgetExceeded("GroupTable: |Sp(" + std::to_string(2 * n) + "," + std::to_string(q) +
                                           ")| = " + std::to_string(expected) + " exceeds the element cap");
  generators_ = standard_generators(field_, n);
  std::vector<Packed> gens;
  for (const auto& g : generators_) gens.push_back(pack(g));

  elements_.reserve(expected);
  index_.reserve(expected);
  Packed id = pack(Mat::identity(field_, dim()));
  elements_.push_back(id);
  index_.emplace(id, 0);
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (const auto& g : gens) {
      Packed x = mul(elements_[i], g);
      if (index_.emplace(x, elements_.size()).second) elements_.push_back(std::move(x));
    }
  if (elements_.size() != expected)
    throw Error("GroupTable: closure has " + std::to_string(elements_.size()) + " elements, expected " +
                std::to_string(expected));

  Packed minus_id = pack(-Mat::identity(field_, dim()));
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    Packed sq = mul(elements_[i], elements_[i]);
    if (sq == id) involutions_.push_back(i);
    if (sq == minus_id) skew_involutions_.push_back(i);
  }
}

Packed GroupTable::pack(const Mat& a) const {
  if (a.field() != field_ || a.rows() != dim() || a.cols() != dim()) throw FieldMismatch();
  Packed out(dim() * dim(), '\0');
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out[i * dim() + j] = static_cast<char>(a(i, j).residue());
  return out;
}

Mat GroupTable::unpack(const Packed& p) const {
  Mat a(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      a(i, j) = Scalar(field_, static_cast<std::int64_t>(static_cast<std::uint8_t>(p[i * dim() + j])));
  return a;
}

void GroupTable::mul(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < d; ++k) s += static_cast<std::int64_t>(a[i * d + k]) * b[k * d + j];
      out[i * d + j] = static_cast<std::uint8_t>(s % q_);
    }
}

Packed GroupTable::mul(const Packed& a, const Packed& b) const {
  Packed out(a.size(), '\0');
  mul(reinterpret_cast<const std::uint8_t*>(a.data()), reinterpret_cast<const std::uint8_t*>(b.data()),
      reinterpret_cast<std::uint8_t*>(out.data()));
  return out;
}

std::optional<std::size_t> GroupTable::index_of(const Mat& a) const {
  if (a.field() != field_ || a.rows() != dim() || a.cols() != dim()) return std::nullopt;
  auto it = index_.find(pack(a));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroupTable::require(const Mat& a) const {
  auto i = index_of(a);
  if (!i) throw DomainError("GroupTable: matrix is not an element of the group");
  return *i;
}

void GroupTable::compute_classes() const {
  if (!class_id_.empty()) return;
  const std::size_t count = elements_.size();
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  class_id_.assign(count, unset);
  conj_from_rep_.assign(count, 0);
  std::vector<std::pair<Packed, Packed>> gens;  // (g^{-1}, g)
  for (const auto& g : generators_) gens.emplace_back(pack(inverse(g)), pack(g));

  std::vector<std::size_t> orbit;
  std::vector<std::size_t> first_rep;
  for (std::size_t start = 0; start < count; ++start) {
    if (class_id_[start] != unset) continue;
    const auto cls = static_cast<std::uint32_t>(first_rep.size());
    // Orbit under conjugation; conj_from_rep_ holds a with a^{-1} start a = x.
    orbit.assign(1, start);
    class_id_[start] = cls;
    conj_from_rep_[start] = 0;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const std::size_t x = orbit[k];
      for (const auto& [gi, g] : gens) {
        std::size_t y = index_.at(mul(mul(gi, elements_[x]), g));
        if (class_id_[y] != unset) continue;
        class_id_[y] = cls;
        conj_from_rep_[y] = static_cast<std::uint32_t>(index_.at(mul(elements_[conj_from_rep_[x]], g)));
        orbit.push_back(y);
      }
    }
    // Re-base on the least element r: x = (a_r^{-1} a_x)^{-1} r (a_r^{-1} a_x).
    std::size_t r = *std::min_element(orbit.begin(), orbit.end(),
                                      [&](std::size_t a, std::size_t b) { return elements_[a] < elements_[b]; });
    Packed ar_inv = pack(inverse(unpack(elements_[conj_from_rep_[r]])));
    for (std::size_t x : orbit)
      conj_from_rep_[x] = static_cast<std::uint32_t>(index_.at(mul(ar_inv, elements_[conj_from_rep_[x]])));
    first_rep.push_back(r);
    sizes_.push_back(orbit.size());
  }
  // Number classes by representative order.
  std::vector<std::size_t> perm(first_rep.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return elements_[first_rep[a]] < elements_[first_rep[b]]; });
  std::vector<std::uint32_t> rank_of(perm.size());
  std::vector<std::uint64_t> sizes(perm.size());
  reps_.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    rank_of[perm[i]] = static_cast<std::uint32_t>(i);
    reps_[i] = first_rep[perm[i]];
    sizes[i] = sizes_[perm[i]];
  }
  sizes_ = std::move(sizes);
  for (auto& c : class_id_) c = rank_of[c];
}

std::size_t GroupTable::class_of(std::size_t element) const {
  compute_classes();
  return class_id_.at(element);
}

std::size_t GroupTable::class_count() const {
  compute_classes();
  return reps_.size();
}

std::size_t GroupTable::class_representative(std::size_t cls) const {
  compute_classes();
  return reps_.at(cls);
}

std::uint64_t GroupTable::class_size(std::size_t cls) const {
  compute_classes();
  return sizes_.at(cls);
}

bool GroupTable::covers(const Field& f, std::size_t d) const { return f == field_ && d == dim(); }

std::optional<std::pair<Mat, Mat>> GroupTable::product(const Mat& phi, int e1, int e2) const {
  const Packed& p = elements_[require(phi)];
  Packed target = pack(Mat::scalar(Scalar(field_, e2), dim()));
  const Mat scale = Mat::scalar(Scalar(field_, e1), dim());
  const auto& pool = e1 == 1 ? involutions_ : skew_involutions_;
  for (std::size_t s : pool) {
    // s^{-1} = e1 s.
    Packed t = mul(pack(scale * unpack(elements_[s])), p);
    if (mul(t, t) == target) return std::make_pair(unpack(elements_[s]), unpack(t));
  }
  return std::nullopt;
}

std::optional<Mat> GroupTable::conjugate(const Mat& phi, const Mat& psi) const {
  const std::size_t a = require(phi), b = require(psi);
  compute_classes();
  if (class_id_[a] != class_id_[b]) return std::nullopt;
  Mat aa = unpack(elements_[conj_from_rep_[a]]);
  Mat ab = unpack(elements_[conj_from_rep_[b]]);
  return inverse(aa) * ab;
}

std::uint64_t element_order(const Mat& a) {
  Mat x = a;
  std::uint64_t k = 1;
  while (!x.is_identity()) {
    x = x * a;
    ++k;
  }
  return k;
}

std::string elementary_divisors_to_string(const std::vector<ElementaryDivisor>& eds) {
  std::string out;
  for (const auto& ed : eds) {
    if (!out.empty()) out += ";";
    out += "(" + ed.base.to_string() + ")^" + std::to_string(ed.exponent) + "*" + std::to_string(ed.multiplicity);
  }
  return out;
}

std::string serialize_compact(const Mat& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += " ";
      out += a(i, j).to_string();
    }
  }
  return out;
}

std::vector<ClassRecord> conjugacy_classes(const GroupTable& g, const ClassifyOptions& opt, unsigned jobs) {
  const std::size_t count = g.class_count();
  std::vector<ClassRecord> out(count);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t c = next++; c < count; c = next++) {
      Mat rep = g.unpack(g.elements()[g.class_representative(c)]);
      auto phi = SymplecticElement::standard(rep);
      ClassifyOptions o = opt;
      if (!o.oracle) o.oracle = &g;
      o.seed = opt.seed + c;
      Mat id = Mat::identity(g.field(), g.dim());
      ClassRecord& r = out[c];
      r.class_id = c;
      r.representative = rep;
      r.size = g.class_size(c);
      r.element_order = element_order(rep);
      r.elementary_divisors = *invariant_factors(rep).elementary_divisors;
      r.is_involution = rep * rep == id;
      r.is_skew_involution = rep * rep == -id;
      r.reversible = is_reversible_sp(phi, o).verdict;
      r.bireflectional = is_bireflectional(phi, o).verdict;
      r.two_skew = is_two_skew_product(phi, o).verdict;
      r.inv_skew = is_inv_skew_product(phi, o).verdict;
      r.psp_rev_not_biref = psp_reversible_not_bireflectional(phi, o).verdict;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < std::max(1u, jobs); ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

std::string class_table_csv(const std::vector<ClassRecord>& classes) {
  std::ostringstream os;
  os << "class_id,rep,size,order_of_element,elementary_divisors,is_involution,is_skew_involution,reversible,"
        "bireflectional,two_skew,inv_skew,psp_rev_not_biref\n";
  auto b = [](bool x) { return x ? "true" : "false"; };
  for (const auto& r : classes)
    os << r.class_id << "," << serialize_compact(r.representative) << "," << r.size << "," << r.element_order << ","
       << elementary_divisors_to_string(r.elementary_divisors) << "," << b(r.is_involution) << ","
       << b(r.is_skew_involution) << "," << to_string(r.reversible) << "," << to_string(r.bireflectional) << ","
       << to_string(r.two_skew) << "," << to_string(r.inv_skew) << "," << to_string(r.psp_rev_not_biref) << "\n";
  return os.str();
}

std::vector<Mat> sample_elements(int n, std::int64_t q, std::size_t count, Rng& rng) {
  Field f = Field::prime(q);
  Mat g = Mat::standard_symplectic(f, static_cast<std::size_t>(n));
  std::vector<Mat> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_symplectic(g, rng));
  return out;
}

}  // namespace sympinv
