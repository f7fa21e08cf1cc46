"""
Tour of the built-in TSD coding scheme
======================================

The scheme bundles 34 codes: 12 core-expression codes (families TG, SL, TC,
CT), 10 concern-response codes (ACK, ADD, MAR), and an ANTI-* mirror for
every core code. Each code carries exactly one weighted metric-component
assignment (TCE, TRR, ANTI_TCE, or ANTI_TRR).
"""

from collections import Counter

from tsdlab import builtin_tsd_scheme, load_scheme, serialize_scheme, validate_scheme

scheme = builtin_tsd_scheme()
print(f"scheme {scheme.name!r} version {scheme.version}: {len(scheme.codes)} codes")

# How the codes split across metric components.
print(Counter(a.component for a in scheme.assignments))

# The weight table, grouped by component.
for component in ("TCE", "TRR", "ANTI_TCE", "ANTI_TRR"):
    rows = [a for a in scheme.assignments if a.component == component]
    print(f"\n{component} ({len(rows)} codes)")
    for a in sorted(rows, key=lambda a: (-a.weight, a.code_id)):
        code = scheme.code(a.code_id)
        print(f"  w={a.weight:g}  {a.code_id:<12} {code.name}")

# Every ANTI-* mirror shares its target's weight.
for code in scheme.codes:
    if code.family == "ANTI":
        assert scheme.weight(code.id) == scheme.weight(code.anti_of)
print("\nANTI-* mirrors confirmed to share their target weights")

# Round-trip through the file format is lossless.
assert load_scheme(serialize_scheme(scheme)) == scheme
print("file round-trip: identical")

# Validation reports are data, not exceptions: break the scheme and look.
from tsdlab.schema import Code, CodingScheme

broken = CodingScheme(
    scheme.name, scheme.version, scheme.codes + (Code("XX-NEW", "New", "Unassigned.", "TG"),),
    scheme.assignments,
)
for violation in validate_scheme(broken):
    print(f"violation: {violation.kind}: {violation.message}")
