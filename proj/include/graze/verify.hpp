#pragma once

#include <string>
#include <vector>

namespace graze {

enum class CheckKind { near, at_most, at_least };

struct Check {
  std::string name;
  double expected = 0;
  double actual = 0;
  double tolerance = 0;  // zero for at_most / at_least
  bool pass = false;
  std::string detail;
  CheckKind kind = CheckKind::near;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  bool overall = true;

  // |actual - expected| <= tolerance
  void near(std::string name, double expected, double actual, double tolerance, std::string detail = {});
  // actual <= bound
  void at_most(std::string name, double bound, double actual, std::string detail = {});
  // actual >= bound
  void at_least(std::string name, double bound, double actual, std::string detail = {});

 private:
  void push(Check c);
};

const std::vector<std::string>& verification_suites();

// Throws DomainError for an unknown suite name.
VerificationReport run_verification(const std::string& suite);

VerificationReport verify_airy();
VerificationReport verify_beam();
VerificationReport verify_appendix1();
VerificationReport verify_appendix2();
VerificationReport verify_appendix3();
VerificationReport verify_closedform();

}  // namespace graze
