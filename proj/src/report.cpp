#include "qhopf/report.hpp"

#include <functional>
#include <sstream>

#include "sums.hpp"

namespace qhopf {

using nlohmann::json;

namespace {

struct Section {
  std::string name;
  VerificationReport checks;
  json objects = json::object();
  std::vector<std::string> notes;

  void add(const std::string& prefix, const VerificationReport& rep) {
    for (const auto& l : rep.laws()) {
      auto& dst = checks.law(prefix + l.law);
      dst = l;
      dst.law = prefix + l.law;
    }
  }
};

class Runner {
 public:
  Runner(const QuasiHopfPresentation& p, const std::optional<SubalgebraPair>& pair) : p_(p), pair_(pair) {
    for (std::size_t i = 0; i < p.dim(); ++i) labels_.push_back(detail::label(p.qb.algebra, i));
  }

  void run(const std::string& name, const std::function<void(Section&)>& body) {
    Section s;
    s.name = name;
    try {
      body(s);
    } catch (const std::exception& e) {
      s.checks.law(name + ".error").expect(false, name, e.what());
    }
    sections_.push_back(std::move(s));
  }

  const QuasiHopfAlgebra& h() {
    if (!h_) h_.emplace(p_);
    return *h_;
  }
  const IntegralData& data() {
    if (!data_) data_ = integral_data(h());
    return *data_;
  }
  std::string show(const Element& v) const { return pretty(v, labels_); }
  std::string show(const Functional& f) const {
    std::string s;
    for (std::size_t i = 0; i < f.dim(); ++i) s += (i ? ", " : "") + labels_[i] + " -> " + f[i].str();
    return "{" + s + "}";
  }

  void check(Section& s) {
    s.add("", verify_all(h()));
    s.objects["dimension"] = p_.dim();
    s.objects["field"] = p_.field().tag();
  }

  void integrals(Section& s) {
    const auto& d = data();
    auto& dims = s.checks.law("integrals.one-dimensional");
    dims.expect(d.left.dim() == 1, "left", std::to_string(d.left.dim()));
    dims.expect(d.right.dim() == 1, "right", std::to_string(d.right.dim()));
    auto& proj = s.checks.law("integrals.projection");
    for (std::size_t j = 0; j < h().dim(); ++j) {
      proj.expect(is_left_integral(h(), projection_P(h(), d.qp, h().alg().basis(j))), labels_[j], "P(a) not a left integral");
    }
    s.checks.law("integrals.certificate").expect_equal(integral_certificate(h(), d.qp), h().field().one(), "sum_j f^j(S(P(a_j) beta))");
    auto& th = s.checks.law("theta.inverse");
    for (std::size_t i = 0; i < h().dim(); ++i) {
      const auto pre = theta_inv(h(), d.qp, d.t, h().alg().basis(i));
      th.expect_equal(theta(h(), d.qp, pre.integral, pre.functional), h().alg().basis(i), labels_[i]);
    }
    s.checks.law("mu.character").expect(is_algebra_character(h().alg(), d.mu), "mu", "not an algebra map");
    s.checks.law("mu.nakayama").expect_equal(d.mu.compose(d.fs.eta), h().counit(), "mu o eta");
    s.add("", integral_qp_lemmas(h(), d.qp, d.t, d.r));

    const auto nl = normalized_integral(h(), Side::Left);
    const auto nr = normalized_integral(h(), Side::Right);
    s.objects["left_integral"] = to_json(d.t);
    s.objects["right_integral"] = to_json(d.r);
    s.objects["eps_t"] = h().eps(d.t).str();
    s.objects["normalized_left_integral"] = nl ? to_json(*nl) : json(nullptr);
    s.objects["normalized_right_integral"] = nr ? to_json(*nr) : json(nullptr);
    s.objects["mu"] = to_json(d.mu);
    s.objects["unimodular"] = is_unimodular(h());
    s.notes.push_back("left integral t = " + show(d.t));
    s.notes.push_back("right integral r = " + show(d.r));
    s.notes.push_back("mu = " + show(d.mu) + (d.mu == h().counit() ? " (= eps)" : ""));
    s.notes.push_back(std::string("unimodular = ") + (is_unimodular(h()) ? "true" : "false"));
  }

  void frobenius(Section& s) {
    const auto& d = data();
    s.add("", verify_frobenius_system(h().alg(), d.fs));
    s.checks.law("frobenius.nondegenerate")
        .expect(rank(gram_matrix(h().alg(), d.lambda)) == h().dim(), "Gram matrix", "singular");
    s.checks.law("lambda.normalized").expect_equal(d.lambda(d.t), h().field().one(), "lambda(t)");
    const auto self = derivative(h().alg(), d.fs, d.lambda);
    s.add("", self.checks);
    s.checks.law("derivative.identity").expect_equal(self.d, h().alg().one(), "d(lambda, lambda)");
    s.add("transform.", verify_frobenius_system(h().alg(), antipode_transform(d.fs, h().antipode())));

    const Functional psi = d.lambda.compose(h().antipode());
    s.checks.law("cointegral.fixes-psi").expect_equal(cointegral_projection_E(h(), d.qp, psi), psi, "E(lambda o S)");
    const LinMap e = cointegral_matrix(h(), d.qp);
    s.checks.law("cointegral.idempotent").expect_equal(e * e, e, "E E");
    auto& pinv = s.checks.law("lambda.projection-invariant");
    for (std::size_t j = 0; j < h().dim(); ++j) {
      pinv.expect_equal(d.lambda(projection_P(h(), d.qp, h().alg().basis(j))), d.lambda[j], labels_[j]);
    }

    s.objects["lambda"] = to_json(d.lambda);
    json xs = json::array(), ys = json::array();
    for (const auto& v : d.fs.x) xs.push_back(to_json(v));
    for (const auto& v : d.fs.y) ys.push_back(to_json(v));
    s.objects["x"] = xs;
    s.objects["y"] = ys;
    s.objects["eta"] = to_json(d.fs.eta);
    s.notes.push_back("lambda = " + show(d.lambda));
    s.notes.push_back(std::string("eta = ") + (d.fs.eta == LinMap::identity(h().dim()) ? "id" : d.fs.eta.str()));
  }

  void radford(Section& s) {
    const auto& d = data();
    const auto pre = pre_radford_check(h(), d.fs);
    s.add("", pre.checks);
    const auto hn = hn_fourth_power_check(h(), d);
    s.add("", hn.checks);
    s.objects["d"] = to_json(pre.d_or_u);
    s.objects["u"] = to_json(hn.d_or_u);
    s.objects["mu"] = to_json(d.mu);
    s.notes.push_back("pre-Radford d = " + show(pre.d_or_u) + (pre.holds ? ", formula holds" : ", formula FAILS"));
    s.notes.push_back("comodulus u = " + show(hn.d_or_u) + (hn.holds ? ", Hausser-Nill holds" : ", Hausser-Nill FAILS"));
    if (is_hopf(h())) {
      const auto hr = hopf_radford_check(h());
      s.add("", hr.checks);
      s.checks.law("radford.agreement").expect(hr.holds == hn.holds && hr.d_or_u == hn.d_or_u, "b vs u",
                                               "b = " + show(hr.d_or_u) + ", u = " + show(hn.d_or_u));
      s.objects["b"] = to_json(hr.d_or_u);
      s.notes.push_back("distinguished group-like b = " + show(hr.d_or_u));
    }
  }

  void separability(Section& s) {
    const auto nl = normalized_integral(h(), Side::Left);
    const auto nr = normalized_integral(h(), Side::Right);
    const auto qp = qp_elements(h());
    const auto certs = separability_elements(h(), qp, nl, nr);
    bool any = false;
    json cj = json::array();
    for (const auto& c : certs.certificates) {
      const std::string v = to_string(c.variant);
      s.add(v + ".", c.checks);
      any = any || c.passed();
      cj.push_back({{"variant", v}, {"element", to_json(c.element)}, {"passed", c.passed()}});
      s.checks.law(v + ".maschke")
          .expect(is_left_integral(h(), integral_from_separability(h(), c.element)), v, "e^1 eps(e^2) not an integral");
    }
    const bool separable = nl.has_value() || nr.has_value();
    const auto split = counit_splitting(h());
    auto& eq = s.checks.law("separability.equivalence");
    eq.expect(separable == any, "integral vs certificate", "normalized integral and certificates disagree");
    eq.expect(separable == split.has_value(), "integral vs splitting", "normalized integral and splitting disagree");
    if (separable) s.checks.law("separability.unimodular").expect(is_unimodular(h()), "H", "separable but not unimodular");

    const auto haar = haar_frobenius_system(h(), qp);
    const auto strong = strong_separability_check(h(), haar ? *haar : data().fs);
    s.add("", strong.checks);

    s.objects["separable"] = separable;
    s.objects["certificates"] = cj;
    s.objects["splitting"] = split ? to_json(*split) : json(nullptr);
    s.objects["strong"] = {{"u", to_json(strong.u)},
                           {"strongly_separable", strong.strongly_separable},
                           {"hypotheses", strong.hypotheses}};
    if (!certs.diagnostic.empty()) {
      s.objects["diagnostic"] = certs.diagnostic;
      s.notes.push_back(certs.diagnostic);
    }
    s.notes.push_back(std::string("separable = ") + (separable ? "true" : "false"));
    if (split) s.notes.push_back("counit splitting s = " + show(*split));
    s.notes.push_back("strong separability u = " + show(strong.u) +
                      (strong.strongly_separable ? " (invertible)" : " (not invertible)"));
  }

  void extension(Section& s) {
    if (!pair_) throw std::invalid_argument("no subalgebra given");
    s.add("", verify_subalgebra(*pair_));
    if (!s.checks.ok()) return;
    const auto cert = beta_frobenius_certificate(*pair_);
    s.add("", cert.checks);
    s.objects["F"] = to_json(cert.F);
    s.objects["beta_rel"] = to_json(cert.beta_rel);
    json mb = json::array();
    for (const auto& b : cert.module_basis) mb.push_back(to_json(b));
    s.objects["module_basis"] = mb;
    s.notes.push_back("K = " + pair_->sub_presentation.name + " (dimension " + std::to_string(pair_->sub_basis.size()) + ")");
    s.notes.push_back(std::string("beta_rel = ") +
                      (cert.beta_rel == LinMap::identity(cert.beta_rel.rows()) ? "id" : cert.beta_rel.str()));
  }

  CommandReport finish(Command c) const {
    CommandReport out;
    std::ostringstream text;
    text << to_string(c) << ": " << (p_.name.empty() ? "(unnamed)" : p_.name) << " over " << p_.field().tag()
         << ", dimension " << p_.dim() << "\n";
    json secs = json::array();
    for (const auto& s : sections_) {
      out.ok = out.ok && s.checks.ok();
      text << "\n[" << s.name << "] " << (s.checks.ok() ? "PASS" : "FAIL") << "\n" << s.checks.summary();
      for (const auto& n : s.notes) text << "  " << n << "\n";
      secs.push_back({{"section", s.name}, {"ok", s.checks.ok()}, {"checks", to_json(s.checks)}, {"objects", s.objects}});
    }
    text << "\n" << (out.ok ? "ALL PASS" : "FAILED") << "\n";
    out.doc = {{"command", to_string(c)},
               {"name", p_.name},
               {"field", p_.field().tag()},
               {"dimension", p_.dim()},
               {"ok", out.ok},
               {"sections", secs}};
    out.text = text.str();
    return out;
  }

 private:
  const QuasiHopfPresentation& p_;
  const std::optional<SubalgebraPair>& pair_;
  std::vector<std::string> labels_;
  std::optional<QuasiHopfAlgebra> h_;
  std::optional<IntegralData> data_;
  std::vector<Section> sections_;
};

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check",        "integrals", "frobenius", "radford",
                                              "separability", "extension", "report"};
  return names;
}

std::optional<Command> parse_command(const std::string& name) {
  const auto& n = command_names();
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == name) return static_cast<Command>(i);
  }
  return std::nullopt;
}

std::string to_string(Command c) { return command_names().at(static_cast<std::size_t>(c)); }

CommandReport run_command(Command c, const QuasiHopfPresentation& p, const std::optional<SubalgebraPair>& pair) {
  Runner r(p, pair);
  auto section = [&](const std::string& name, void (Runner::*fn)(Section&)) {
    r.run(name, [&](Section& s) { (r.*fn)(s); });
  };
  switch (c) {
    case Command::Check: section("check", &Runner::check); break;
    case Command::Integrals: section("integrals", &Runner::integrals); break;
    case Command::Frobenius: section("frobenius", &Runner::frobenius); break;
    case Command::Radford: section("radford", &Runner::radford); break;
    case Command::Separability: section("separability", &Runner::separability); break;
    case Command::Extension: section("extension", &Runner::extension); break;
    case Command::Report:
      section("check", &Runner::check);
      section("integrals", &Runner::integrals);
      section("frobenius", &Runner::frobenius);
      section("radford", &Runner::radford);
      section("separability", &Runner::separability);
      if (pair) section("extension", &Runner::extension);
      break;
  }
  return r.finish(c);
}

json to_json(const Element& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(v[i].str());
  return a;
}

json to_json(const Functional& f) { return to_json(Element(f.coeffs())); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(Element(m.row(i))));
  return rows;
}

json to_json(const Tensor& t) {
  json a = json::array();
  t.for_each_nonzero([&](const Tensor::Index& idx, const Scalar& c) {
    json e = json::array();
    for (std::size_t k : idx) e.push_back(k);
    e.push_back(c.str());
    a.push_back(e);
  });
  return a;
}

json to_json(const VerificationReport& rep) {
  json a = json::array();
  for (const auto& l : rep.laws()) {
    json w = json::array();
    for (const auto& x : l.witnesses) w.push_back({{"where", x.where}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    json e = {{"law", l.law}, {"status", l.passed() ? "PASS" : "FAIL"}, {"cases", l.cases}, {"failures", l.failures}};
    if (!w.empty()) e["witnesses"] = w;
    if (!l.note.empty()) e["note"] = l.note;
    a.push_back(e);
  }
  return a;
}

std::string pretty(const Element& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_zero()) continue;
    const std::string lab = i < labels.size() ? labels[i] : "e" + std::to_string(i);
    std::string c = v[i].str();
    const bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (s.empty()) {
      s += neg ? "-" : "";
    } else {
      s += neg ? " - " : " + ";
    }
    if (c == "1") {
      s += lab;
    } else if (lab == "1") {
      s += c;
    } else {
      s += c + " " + lab;
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace qhopf
