#include "qhopf/verification.hpp"

#include <sstream>

namespace qhopf {

bool LawResult::expect(bool ok, const std::string& where, const std::string& detail) {
  ++cases;
  if (!ok) fail(where, detail, {});
  return ok;
}

void LawResult::fail(const std::string& where, std::string lhs, std::string rhs) {
  ++failures;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back({where, std::move(lhs), std::move(rhs)});
}

LawResult& VerificationReport::law(const std::string& name) {
  for (auto& l : laws_) {
    if (l.law == name) return l;
  }
  LawResult l;
  l.law = name;
  laws_.push_back(std::move(l));
  return laws_.back();
}

const LawResult* VerificationReport::find(const std::string& name) const {
  for (const auto& l : laws_) {
    if (l.law == name) return &l;
  }
  return nullptr;
}

bool VerificationReport::ok() const {
  for (const auto& l : laws_) {
    if (!l.passed()) return false;
  }
  return true;
}

std::vector<std::string> VerificationReport::failed_laws() const {
  std::vector<std::string> out;
  for (const auto& l : laws_) {
    if (!l.passed()) out.push_back(l.law);
  }
  return out;
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& l : other.laws_) {
    auto& mine = law(l.law);
    mine.cases += l.cases;
    mine.failures += l.failures;
    for (const auto& w : l.witnesses) {
      if (mine.witnesses.size() < LawResult::kMaxWitnesses) mine.witnesses.push_back(w);
    }
    if (mine.note.empty()) mine.note = l.note;
  }
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  for (const auto& l : laws_) {
    os << (l.passed() ? "PASS " : "FAIL ") << l.law << " (" << l.cases << " cases";
    if (!l.passed()) os << ", " << l.failures << " failed";
    os << ")";
    if (!l.note.empty()) os << " -- " << l.note;
    os << "\n";
    for (const auto& w : l.witnesses) {
      os << "    at " << w.where;
      if (!w.lhs.empty()) os << ": lhs=" << w.lhs;
      if (!w.rhs.empty()) os << " rhs=" << w.rhs;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace qhopf
