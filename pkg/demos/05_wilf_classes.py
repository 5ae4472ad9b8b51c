"""Classifying the length-4 pattern universe by avoider counts.

All 75 normalized length-4 patterns are grouped by their count vectors up
to a horizon.  Equality is only ever claimed up to that horizon, and the
horizon matters: two classes agree through n = 6 and split at n = 7.
"""

from ascentseq import wilf_classify

report = wilf_classify(4, 10)
print(f"horizon {report.horizon}: {len(report.classes)} classes")
for cls in report.classes:
    members = ",".join(str(p) for p in cls.members)
    tag = "  <- Catalan (no restriction)" if cls.is_catalan else ""
    print(f"    {{{members}}}{tag}")
    print(f"      {cls.counts}")

print("\nHorizon sensitivity:")
at6 = wilf_classify(4, 6).class_of("1000")
print("    n<=6 :", ",".join(str(p) for p in at6.members))
at7 = wilf_classify(4, 7)
a, b = at7.class_of("1000"), at7.class_of("1200")
print("    n<=7 :", ",".join(str(p) for p in a.members), "|",
      ",".join(str(p) for p in b.members),
      f"(split by {a.counts[7]} vs {b.counts[7]})")
