// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "qhopf/examples.hpp"
#include "qhopf/io.hpp"

using namespace qhopf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Named {
  std::string name;
  QuasiHopfAlgebra h;
};

std::vector<Named> four() {
  std::vector<Named> out;
  for (const auto& p : standard_examples()) out.push_back({p.name, QuasiHopfAlgebra(p)});
  return out;
}

/// Collects failure reasons for one criterion.
class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void axiom_suite(Criterion& c) {
  const auto t0 = Clock::now();
  for (const auto& e : four()) c.require(verify_all(e.h).ok(), e.name + ": verifier");
  const double s = seconds_since(t0);
  c.require(s < 5.0, "runtime " + std::to_string(s) + " s");
}

void integrals(Criterion& c) {
  for (const auto& [name, h] : four()) {
    const auto qp = qp_elements(h);
    c.require(integral_space(h, Side::Left).dim() == 1, name + ": dim left integrals");
    c.require(integral_space(h, Side::Right).dim() == 1, name + ": dim right integrals");
    for (std::size_t j = 0; j < h.dim(); ++j) {
      c.require(is_left_integral(h, projection_P(h, qp, h.alg().basis(j))), name + ": P(e_j) not in left integrals");
    }
    c.require(integral_certificate(h, qp) == h.field().one(), name + ": certificate != 1");
  }
}

void theta_isomorphism(Criterion& c) {
  for (const auto& [name, h] : four()) {
    const auto d = integral_data(h);
    for (std::size_t i = 0; i < h.dim(); ++i) {
      const auto pre = theta_inv(h, d.qp, d.t, h.alg().basis(i));
      c.require(theta(h, d.qp, pre.integral, pre.functional) == h.alg().basis(i), name + ": theta theta^-1 != id");
    }
    c.require(rank(gram_matrix(h.alg(), d.lambda)) == h.dim(), name + ": Gram matrix singular");
  }
}

void frobenius_nakayama(Criterion& c) {
  for (const auto& [name, h] : four()) {
    const auto d = integral_data(h);
    c.require(verify_frobenius_system(h.alg(), d.fs).ok(), name + ": Frobenius system");
    for (std::size_t a = 0; a < h.dim(); ++a) {
      const Element ea = h.alg().basis(a);
      const Element eta_a(d.fs.eta.apply(ea.coeffs()));
      for (std::size_t x = 0; x < h.dim(); ++x) {
        const Element ex = h.alg().basis(x);
        c.require(d.lambda(h.alg().mul(ea, ex)) == d.lambda(h.alg().mul(ex, eta_a)), name + ": lambda(ax) != lambda(x eta(a))");
      }
    }
    c.require(d.mu.compose(d.fs.eta) == h.counit(), name + ": mu o eta != eps");
  }
  const QuasiHopfAlgebra sw(example_sweedler());
  const QuasiHopfAlgebra c2(example_group_c2());
  c.require(integral_data(sw).mu != sw.counit(), "Sweedler: mu == eps");
  c.require(integral_data(c2).mu == c2.counit(), "C2: mu != eps");
}

void pre_radford(Criterion& c) {
  std::vector<QuasiHopfPresentation> all = standard_examples();
  const auto tw = twisted_variants();
  c.require(tw.size() >= 10, "fewer than 10 twisted variants");
  all.insert(all.end(), tw.begin(), tw.end());
  for (const auto& p : all) {
    const QuasiHopfAlgebra h(p);
    const auto r = pre_radford_check(h, integral_data(h).fs);
    c.require(r.holds && r.lhs == r.rhs, p.name + ": S eta S^-1 eta != Ad_{d^-1}");
  }
}

void hausser_nill(Criterion& c) {
  for (const auto& [name, h] : four()) {
    const auto r = hn_fourth_power_check(h, integral_data(h));
    c.require(r.holds && r.lhs == r.rhs, name + ": S^2 S_mu^2 != Ad_{u^-1}");
  }
  const QuasiHopfAlgebra sw(example_sweedler());
  const auto hn = hn_fourth_power_check(sw, integral_data(sw));
  const auto hr = hopf_radford_check(sw);
  const LinMap s2 = sw.antipode() * sw.antipode();
  c.require(s2 * s2 == LinMap::identity(4), "Sweedler: S^4 != id");
  c.require(hr.holds && hr.lhs == hr.rhs, "Sweedler: Hopf Radford formula");
  c.require(hr.holds == hn.holds && hr.d_or_u == hn.d_or_u, "Sweedler: Hopf Radford and Hausser-Nill disagree");
}

void separability(Criterion& c) {
  for (const auto& p : {example_dual_z2_twisted(), example_group_s3()}) {
    const QuasiHopfAlgebra h(p);
    const auto els = separability_elements(h);
    c.require(els.certificates.size() == 4, p.name + ": not four certificates");
    for (const auto& cert : els.certificates) {
      c.require(cert.passed(), p.name + ": " + to_string(cert.variant) + " fails");
      c.require(verify_separability_element(h.alg(), cert.element).ok(), p.name + ": re-verification");
    }
    const auto s = counit_splitting(h);
    c.require(s.has_value(), p.name + ": no counit splitting");
    if (s) {
      for (std::size_t a = 0; a < h.dim(); ++a) {
        const Element ea = h.alg().basis(a);
        c.require(h.alg().mul(ea, *s) == h.eps(ea) * *s, p.name + ": splitting not H-linear");
      }
      c.require(h.eps(*s) == h.field().one(), p.name + ": eps(s) != 1");
    }
    c.require(is_unimodular(h), p.name + ": separable but not unimodular");
  }
  for (const auto& p : {example_sweedler(), example_group_c2(FieldSpec::prime(2))}) {
    const QuasiHopfAlgebra h(p);
    c.require(!normalized_integral(h, Side::Left) && !normalized_integral(h, Side::Right),
              p.name + ": has a normalized integral");
    c.require(separability_elements(h).certificates.empty(), p.name + ": has a certificate");
    c.require(!counit_splitting(h), p.name + ": counit splits");
  }
}

void strong_separability(Criterion& c) {
  const QuasiHopfAlgebra h(example_group_s3());
  const auto& alg = h.alg();
  c.require(alg.mul(h.beta(), h.S(h.alpha())) == alg.one(), "beta S(alpha) != 1");
  c.require(h.antipode() * h.antipode() == LinMap::identity(h.dim()), "S^2 != id");
  const auto fs = haar_frobenius_system(h, qp_elements(h));
  c.require(fs.has_value(), "no Haar system");
  if (!fs) return;
  Element u = alg.zero();
  for (std::size_t i = 0; i < fs->x.size(); ++i) u += alg.mul(fs->y[i], fs->x[i]);
  c.require(u == alg.one(), "sum y_i x_i != 1");
  c.require(fs->eta == LinMap::identity(h.dim()), "eta != id");
  for (std::size_t a = 0; a < h.dim(); ++a) {
    for (std::size_t b = 0; b < h.dim(); ++b) {
      c.require(fs->phi(alg.mul(alg.basis(a), alg.basis(b))) == fs->phi(alg.mul(alg.basis(b), alg.basis(a))),
                "lambda not a trace");
    }
  }
  Tensor xy(h.dim(), 2), yx(h.dim(), 2);
  for (std::size_t i = 0; i < fs->x.size(); ++i) {
    xy += outer(fs->x[i], fs->y[i]);
    yx += outer(fs->y[i], fs->x[i]);
  }
  c.require(xy == yx, "dual-bases tensor not symmetric");
  const auto st = strong_separability_check(h, *fs);
  c.require(st.strongly_separable && st.checks.ok(), "strong separability check");
}

void qp_lemmas(Criterion& c) {
  for (const auto& [name, h] : four()) {
    const auto d = integral_data(h);
    const auto rep = integral_qp_lemmas(h, d.qp, d.t, d.r);
    c.require(rep.ok() && rep.laws().size() >= 4, name + ": integral qp lemmas");
  }
}

void beta_frobenius(Criterion& c) {
  for (const auto& pair : {pair_c3_in_s3(), pair_sweedler_grouplike()}) {
    const std::string name = pair.sub_presentation.name;
    c.require(verify_subalgebra(pair).ok(), name + ": verify_subalgebra");
    try {
      const auto cert = beta_frobenius_certificate(pair);
      c.require(cert.passed(), name + ": certificate");
      for (const char* law : {"extension.nakayama-stable", "extension.twisted-bimodule", "extension.dual-bases"}) {
        const auto* l = cert.checks.find(law);
        c.require(l != nullptr && l->passed(), name + ": " + law);
      }
    } catch (const std::exception& e) {
      c.require(false, name + ": " + e.what());
    }
  }
}

void cointegral(Criterion& c) {
  for (const auto& [name, h] : four()) {
    const auto d = integral_data(h);
    const Functional psi = d.lambda.compose(h.antipode());
    c.require(cointegral_projection_E(h, d.qp, psi) == psi, name + ": E(lambda o S) != lambda o S");
    const LinMap e = cointegral_matrix(h, d.qp);
    c.require(e * e == e, name + ": E^2 != E");
    for (std::size_t j = 0; j < h.dim(); ++j) {
      c.require(d.lambda(projection_P(h, d.qp, h.alg().basis(j))) == d.lambda[j], name + ": lambda o P != lambda");
    }
  }
}

void infrastructure(Criterion& c) {
  const std::filesystem::path dir = QHOPF_PRESENTATIONS_DIR;
  const auto files = shipped_files();
  for (const auto& [name, file] : files) {
    const std::string text = read_file(dir / (name + ".json"));
    c.require(text == serialize_presentation_file(file), name + ": shipped file differs from the export");
    try {
      c.require(serialize_presentation_file(parse_presentation_file(text, name)) == text, name + ": round trip");
    } catch (const InputError& e) {
      c.require(false, name + ": " + e.message());
    }
  }
  const auto t0 = Clock::now();
  for (const auto& [name, file] : files) {
    const std::string cmd = std::string("\"") + QHOPF_CLI + "\" report \"" + (dir / (name + ".json")).string() +
                            "\" -q > /dev/null";
    const int status = std::system(cmd.c_str());
    c.require(status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0, name + ": report exit status");
  }
  const double s = seconds_since(t0);
  c.require(s < 30.0, "report runtime " + std::to_string(s) + " s");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"axiom suite on the four examples", axiom_suite},
      {"integrals, projection P and certificate", integrals},
      {"Theta isomorphism and Gram nondegeneracy", theta_isomorphism},
      {"Frobenius system, Nakayama automorphism and modular augmentation", frobenius_nakayama},
      {"pre-Radford formula on examples and twists", pre_radford},
      {"Hausser-Nill formula and Hopf Radford agreement", hausser_nill},
      {"separability in both directions", separability},
      {"strong separability of Q[S3]", strong_separability},
      {"integral qp lemmas", qp_lemmas},
      {"beta-Frobenius extensions", beta_frobenius},
      {"cointegral projection E", cointegral},
      {"file round trip and report on shipped files", infrastructure},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << seconds_since(t0) << " s)\n";
    for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
    if (!c.ok()) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
