#include "poqrw/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

namespace poqrw::io {
namespace {

std::vector<std::vector<double>> rows_of(const json& j, const char* what) {
  try {
    return j.get<std::vector<std::vector<double>>>();
  } catch (const json::exception&) {
    throw ValidationError(std::string(what) + " must be a list of lists of numbers");
  }
}

std::vector<double> list_of(const json& j, const char* what) {
  try {
    return j.get<std::vector<double>>();
  } catch (const json::exception&) {
    throw ValidationError(std::string(what) + " must be a list of numbers");
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("spec is missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("spec field \"") + key + "\" has the wrong type");
  }
}

CVector vector_from_json(const json& j, const char* what) {
  if (!j.is_object() || !j.contains("re")) {
    throw ValidationError(std::string(what) + " must be an object with \"re\" (and optional \"im\")");
  }
  const auto re = list_of(j.at("re"), what);
  const auto im = j.contains("im") ? list_of(j.at("im"), what) : std::vector<double>(re.size(), 0.0);
  if (im.size() != re.size()) throw ValidationError(std::string(what) + ": re/im length mismatch");
  CVector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) v(static_cast<Eigen::Index>(i)) = cplx(re[i], im[i]);
  return v;
}

json vector_to_json(const CVector& v) {
  std::vector<double> re, im;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return {{"re", re}, {"im", im}};
}

}  // namespace

CMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re")) {
    throw ValidationError("matrix must be an object with \"re\" (and optional \"im\")");
  }
  const auto re = rows_of(j.at("re"), "matrix re");
  std::vector<std::vector<double>> im;
  if (j.contains("im")) {
    im = rows_of(j.at("im"), "matrix im");
  } else {
    for (const auto& row : re) im.emplace_back(row.size(), 0.0);
  }
  const std::size_t rows = re.size();
  const std::size_t cols = rows ? re.front().size() : 0;
  if (im.size() != rows) throw ValidationError("matrix re/im row count mismatch");
  CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (re[r].size() != cols || im[r].size() != cols) throw ValidationError("matrix rows are ragged");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = cplx(re[r][c], im[r][c]);
  }
  return m;
}

json matrix_to_json(const CMatrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::vector<double> rr, ii;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ii.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  return {{"re", re}, {"im", im}};
}

json complex_list(const std::vector<cplx>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back({{"re", v.real()}, {"im", v.imag()}});
  return out;
}

WalkSpec preset(const std::string& name, double theta, double p) {
  if (name == "hadamard") return hadamard_spec(theta, p);
  if (name == "example-n3") return example_n3_spec(p);
  throw ValidationError("unknown preset '" + name + "' (expected hadamard or example-n3)");
}

WalkSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("spec must be a JSON object");
  if (j.contains("preset")) {
    const auto name = field<std::string>(j, "preset");
    const double p = field<double>(j, "p");
    const double theta = j.contains("theta") ? field<double>(j, "theta") : std::numbers::pi / 4;
    if (name == "hadamard" && !j.contains("theta")) {
      throw ValidationError("preset hadamard requires field \"theta\"");
    }
    WalkSpec s = preset(name, theta, p);
    if (j.contains("phi0")) s.phi0 = vector_from_json(j.at("phi0"), "phi0");
    return s;
  }
  WalkSpec s;
  s.n = field<int>(j, "n");
  s.n1 = field<int>(j, "n1");
  s.p = field<double>(j, "p");
  if (!j.contains("unitary")) throw ValidationError("spec is missing field \"unitary\"");
  s.unitary = matrix_from_json(j.at("unitary"));
  if (!j.contains("phi0")) throw ValidationError("spec is missing field \"phi0\"");
  s.phi0 = vector_from_json(j.at("phi0"), "phi0");
  return s;
}

json spec_to_json(const WalkSpec& spec) {
  return {{"n", spec.n},
          {"n1", spec.n1},
          {"p", spec.p},
          {"unitary", matrix_to_json(spec.unitary)},
          {"phi0", vector_to_json(spec.phi0)}};
}

WalkSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read spec file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("spec file '" + path + "' is not valid JSON: " + e.what());
  }
  return spec_from_json(j);
}

std::string spec_hash(const WalkSpec& spec) {
  const std::string text = spec_to_json(spec).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

json to_json(const SpectralReport& r) {
  return {{"k", r.k},
          {"p", r.p},
          {"eigenvalues", complex_list(r.eigenvalues)},
          {"gap", r.gap},
          {"condition_holds", r.condition_holds},
          {"tolerance", r.tolerance}};
}

json to_json(const LiftReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) {
    samples.push_back({{"p", s.p},
                       {"condition_holds", s.condition_holds},
                       {"peripheral_only_at_one", s.peripheral_only_at_one},
                       {"gap", s.gap}});
  }
  return {{"applicable", r.applicable},
          {"reason", r.reason},
          {"samples", samples},
          {"fixed_point_residual", r.fixed_point_residual},
          {"passed", r.passed}};
}

json to_json(const Moments& m, int t) {
  const double td = t > 0 ? double(t) : 1.0;
  return {{"t", t},
          {"mean", m.mean},
          {"variance", m.variance},
          {"mean_over_t", t > 0 ? m.mean / td : 0.0},
          {"variance_over_t", t > 0 ? m.variance / td : 0.0}};
}

json to_json(const CltReport& r) {
  json rows = json::array();
  for (std::size_t i = 0; i < r.nu.size(); ++i) {
    rows.push_back({{"nu", r.nu[i]},
                    {"rescaled", {{"re", r.rescaled[i].real()}, {"im", r.rescaled[i].imag()}}},
                    {"mixture", r.mixture[i].real()}});
  }
  return {{"t", r.t}, {"max_deviation", r.max_deviation}, {"points", rows}};
}

void write_limit_csv(std::ostream& os, const std::vector<LimitReport>& rows,
                     const std::vector<double>& gaps) {
  os << "k,sigma2,z0p_re,z0p_im,z0pp_re,z0pp_im,gap\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << r.k << ',' << r.sigma2 << ',' << r.z0_prime.real() << ',' << r.z0_prime.imag() << ','
       << r.z0_doubleprime.real() << ',' << r.z0_doubleprime.imag() << ','
       << (i < gaps.size() ? gaps[i] : 0.0) << '\n';
  }
}

void write_distribution_csv(std::ostream& os, const Distribution& d) {
  os << "x,prob\n" << std::setprecision(17);
  for (int x = d.min_x; x <= d.max_x(); ++x) os << x << ',' << d(x) << '\n';
}

void write_empirical_csv(std::ostream& os, const EmpiricalDist& d) {
  os << "x,count,freq\n" << std::setprecision(17);
  for (int x = -d.t; x <= d.t; ++x) os << x << ',' << d.count(x) << ',' << d.freq(x) << '\n';
}

}  // namespace poqrw::io
