#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

namespace qhopf {

struct Witness {
  std::string where;  // e.g. "a=e2" or "(i,j,k)=(0,1,1)"
  std::string lhs;
  std::string rhs;
};

/// Outcome of one law, evaluated over `cases` basis instances.
struct LawResult {
  std::string law;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<Witness> witnesses;  // first few failures only
  std::string note;

  bool passed() const { return failures == 0; }

  /// Records one instance. Returns whether it held.
  template <class T>
  bool expect_equal(const T& lhs, const T& rhs, const std::string& where) {
    ++cases;
    if (lhs == rhs) return true;
    fail(where, lhs.str(), rhs.str());
    return false;
  }
  bool expect(bool ok, const std::string& where, const std::string& detail = {});
  void fail(const std::string& where, std::string lhs, std::string rhs);

  static constexpr std::size_t kMaxWitnesses = 4;
};

/// Structured pass/fail record. Failures are entries, never exceptions.
class VerificationReport {
 public:
  LawResult& law(const std::string& name);
  const LawResult* find(const std::string& name) const;

  bool ok() const;
  const std::deque<LawResult>& laws() const { return laws_; }
  std::vector<std::string> failed_laws() const;
  void merge(const VerificationReport& other);

  /// One line per law: "PASS law (cases)" / "FAIL law ... witness".
  std::string summary() const;

 private:
  std::deque<LawResult> laws_;  // stable references across law()
};

}  // namespace qhopf
