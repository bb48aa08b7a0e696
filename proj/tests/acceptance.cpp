// Acceptance run: one PASS/FAIL line per criterion, sub-check details below it.
// Exit status is nonzero when any criterion fails.

#include <nilorb/verify.hpp>

#include <iomanip>
#include <iostream>

using namespace nilorb;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<CheckResult> checks;
};

bool report(const Criterion& c)
{
  bool ok = !c.checks.empty();
  double secs = 0;
  for (const auto& r : c.checks) {
    ok = ok && r.passed;
    secs += r.seconds;
  }
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << std::fixed
            << std::setprecision(2) << secs << " s)\n";
  for (const auto& r : c.checks)
    std::cout << "    " << (r.passed ? "ok   " : "FAIL ") << r.name << ": " << r.detail << '\n';
  std::cout.flush();
  return ok;
}

}  // namespace

int main()
{
  const Field& f2 = Field::standard(1);
  const Field& f4 = Field::standard(2);
  const auto sp = GroupKind::Sp, odd = GroupKind::OOdd, even = GroupKind::OEven;
  bool all = true;

  all &= report({1, "combinatorial counts, n = 1..10", {check_combinatorial_counts(10)}});

  all &= report({2,
                 "brute-force orbit counts over F2",
                 {check_orbit_count(sp, 1, f2), check_orbit_count(sp, 2, f2), check_orbit_count(odd, 1, f2),
                  check_orbit_count(odd, 2, f2)}});

  all &= report({3,
                 "geometric classes split into 2^k rational orbits",
                 {check_class_splitting(sp, 1, f2), check_class_splitting(sp, 2, f2), check_class_splitting(odd, 1, f2),
                  check_class_splitting(odd, 2, f2)}});

  all &= report({4,
                 "classifier output agrees with oracle orbits",
                 {check_classifier_vs_oracle(sp, 1, f2), check_classifier_vs_oracle(sp, 2, f2),
                  check_classifier_vs_oracle(odd, 1, f2), check_classifier_vs_oracle(odd, 2, f2),
                  check_classifier_vs_oracle(even, 1, f2), check_classifier_vs_oracle(even, 2, f2),
                  check_classifier_vs_oracle(sp, 1, f4), check_classifier_vs_oracle(sp, 2, f4),
                  check_classifier_vs_oracle(odd, 1, f4), check_classifier_vs_oracle(even, 1, f4),
                  check_classifier_vs_oracle(even, 2, f4),
                  check_classifier_vs_oracle(odd, 2, f4, 64)}});

  all &= report({5,
                 "centralizer dimensions and pure-chain counts",
                 {check_centralizer_growth(sp, 1), check_centralizer_growth(sp, 2), check_centralizer_growth(odd, 1),
                  check_centralizer_growth(odd, 2), check_pure_chains(3, 2)}});

  all &= report({6, "even orthogonal theta map and wedge-square form", {check_theta(2, f2), check_wedge_form(2, f2, 100, 7)}});

  all &= report({7, "property suites", property_suite()});

  std::cout << (all ? "all criteria pass\n" : "some criteria fail\n");
  return all ? 0 : 1;
}
