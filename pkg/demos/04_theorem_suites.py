"""Run every verification suite over the shipped corpus.

Each suite ties a structural law to direct counting: oracle equivalence,
the two homogeneity laws, the exponent law under tensor powers, the
compatibility dichotomy, support/vanishing bounds, monotonicity under
invariantly effective twists, the translation structure of weight
semigroups, and the Lipschitz bound on the P^2 bundle family.
"""

from equivol.corpus import default_corpus
from equivol.suites import SUITE_NAMES, run_suite

corpus = default_corpus()
print(f"corpus: {', '.join(name for name, _ in corpus)}\n")

all_ok = True
for name in SUITE_NAMES:
    report = run_suite(name, corpus)
    ok, total = report.counts
    all_ok &= report.passed
    print(f"{report.summary()}")
    if not report.passed:
        for rec in report.records:
            if not rec.passed:
                print(f"  FAIL [{rec.scenario}] {rec.claim}: {rec.lhs} vs {rec.rhs}")

print("\nall suites passed" if all_ok else "\nFAILURES above")
raise SystemExit(0 if all_ok else 1)
