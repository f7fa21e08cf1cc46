"""Coding schemes: code definitions, metric-component assignments, validation.

The built-in TSD scheme carries the full coding vocabulary: twelve
core-expression codes, ten concern-response codes, auto-generated ANTI-*
mirrors of every core code, and the weight table that maps each code to one
of the four metric components (TCE, TRR, ANTI_TCE, ANTI_TRR).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import SchemeError

FAMILIES = ("TG", "SL", "TC", "CT", "ACK", "ADD", "MAR", "ANTI")
CORE_FAMILIES = ("TG", "SL", "TC", "CT")
RESPONSE_FAMILIES = ("ACK", "ADD", "MAR")

COMPONENTS = ("TCE", "TRR", "ANTI_TCE", "ANTI_TRR")
PRO_COMPONENTS = ("TCE", "TRR")
ANTI_COMPONENTS = ("ANTI_TCE", "ANTI_TRR")

_BUILTIN_RESOURCE = "tsd_scheme.json"


@dataclass(frozen=True)
class Code:
    """One label an analyst can attach to a text span."""

    id: str
    name: str
    description: str
    family: str
    anti_of: str | None = None


@dataclass(frozen=True)
class ComponentAssignment:
    """Places a code in one metric component with a weight."""

    code_id: str
    component: str
    weight: float


@dataclass(frozen=True)
class Violation:
    """One invariant failure found by validate_scheme."""

    kind: str
    subject: str
    message: str


@dataclass(frozen=True)
class CodingScheme:
    name: str
    version: str
    codes: tuple[Code, ...]
    assignments: tuple[ComponentAssignment, ...]

    def __post_init__(self):
        object.__setattr__(self, "_codes_by_id", {c.id: c for c in self.codes})
        object.__setattr__(
            self, "_assignments_by_code", {a.code_id: a for a in self.assignments}
        )

    def has_code(self, code_id: str) -> bool:
        return code_id in self._codes_by_id

    def code(self, code_id: str) -> Code:
        try:
            return self._codes_by_id[code_id]
        except KeyError:
            raise SchemeError(f"unknown code {code_id!r}") from None

    def assignment(self, code_id: str) -> ComponentAssignment | None:
        return self._assignments_by_code.get(code_id)

    def weight(self, code_id: str) -> float:
        assignment = self.assignment(code_id)
        if assignment is None:
            raise SchemeError(f"code {code_id!r} has no component assignment")
        return assignment.weight

    def component(self, code_id: str) -> str:
        assignment = self.assignment(code_id)
        if assignment is None:
            raise SchemeError(f"code {code_id!r} has no component assignment")
        return assignment.component

    def codes_in(self, component: str) -> tuple[str, ...]:
        return tuple(a.code_id for a in self.assignments if a.component == component)

    @property
    def code_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.codes)


# Core-expression codes: (id, name, description, weight). Weight 2 marks the
# foundational tenets, weight 1 the more applied or indirect manifestations.
_CORE_CODES = (
    ("TG-PE", "Prioritization of Efficiency",
     "Treats efficiency and convenience as the main values justifying how "
     "technology is adopted and deployed.", 1),
    ("TG-SO", "Superior Outcomes",
     "Assumes that solving the technological framing of a problem delivers "
     "the best outcome for the underlying societal issue.", 1),
    ("TG-TF", "Technology Framing",
     "Perceives and defines societal issues primarily as technology "
     "problems.", 1),
    ("SL-SF", "Solution Focus",
     "Fixates on narrow, usually technological fixes for complex "
     "problems.", 1),
    ("SL-SP", "Singular Problem",
     "Assumes a single definition of a problem instead of probing its many "
     "facets.", 2),
    ("SL-UI", "Unquestioning Implementation",
     "Pushes to roll out solutions fast and wide without weighing their "
     "consequences or assumptions.", 1),
    ("TC-AA", "Always the Answer",
     "Holds that technology is the optimal or primary answer to any "
     "problem, whatever the context.", 2),
    ("TC-OS", "Objectivity and Superiority",
     "Casts technology as inherently more objective and superior to "
     "non-technological approaches.", 1),
    ("TC-PD", "Progress Driver",
     "Frames technology as the essential or inevitable engine of societal "
     "progress.", 2),
    ("CT-DE", "Devaluation of Non-Tech",
     "Discounts non-technological solutions, human wisdom, and social "
     "context in favor of technical intervention.", 2),
    ("CT-MP", "Magical Power",
     "Ascribes near-magical problem-solving power to technology.", 2),
    ("CT-UF", "Utopian Future",
     "Expects future technology to deliver a better, even utopian, "
     "world.", 2),
)

# Concern-response codes: (id, name, description, component, weight).
# ADD-SN and ACK-RI push against the doctrine, so they score on the anti side.
_RESPONSE_CODES = (
    ("ACK-CR", "External Critique",
     "Acknowledges a concern raised by others.", "TRR", 1),
    ("ACK-RI", "Risk",
     "Acknowledges a concern directly.", "ANTI_TRR", 1),
    ("ADD-JU", "Justification",
     "Answers a concern by arguing it is acceptable given overriding "
     "benefits, necessity, precedent, or context.", "TRR", 1),
    ("ADD-RE", "Refutation",
     "Answers a concern by disputing its validity or significance.",
     "TRR", 1),
    ("ADD-SN", "Non-Tech Solution",
     "Answers a concern with a proposed mitigation that is not primarily "
     "technological.", "ANTI_TRR", 2),
    ("ADD-ST", "Tech Solution",
     "Answers a concern with a proposed mitigation that is primarily "
     "technological.", "TRR", 2),
    ("MAR-DE", "Deflection",
     "Sidesteps a concern by changing the subject, shifting blame, or "
     "attacking the critic.", "TRR", 1),
    ("MAR-DI", "Dismissal",
     "Rejects a concern as ignorance or fear-mongering without substantive "
     "refutation.", "TRR", 2),
    ("MAR-MI", "Minimization",
     "Treats a concern as minor, insignificant, rare, or exaggerated.",
     "TRR", 2),
    ("MAR-RF", "Reframing",
     "Recasts a concern as neutral or even beneficial rather than a "
     "problem.", "TRR", 1),
)


def builtin_tsd_scheme() -> CodingScheme:
    """Build the default TSD scheme: 34 codes, one assignment each.

    Every core code gets an ANTI-* mirror (same weight, component ANTI_TCE)
    for annotating explicit contradictions of that tenet. Response codes have
    no mirrors; ADD-SN and ACK-RI already score against the doctrine.
    """
    codes: list[Code] = []
    assignments: list[ComponentAssignment] = []

    for code_id, name, description, weight in _CORE_CODES:
        family = code_id.split("-")[0]
        codes.append(Code(code_id, name, description, family))
        assignments.append(ComponentAssignment(code_id, "TCE", weight))

    for code_id, name, description, component, weight in _RESPONSE_CODES:
        family = code_id.split("-")[0]
        codes.append(Code(code_id, name, description, family))
        assignments.append(ComponentAssignment(code_id, component, weight))

    for code_id, name, _description, weight in _CORE_CODES:
        anti_id = f"ANTI-{code_id}"
        codes.append(
            Code(
                anti_id,
                f"Anti {name}",
                f"Explicitly contradicts the {name} tenet.",
                "ANTI",
                anti_of=code_id,
            )
        )
        assignments.append(ComponentAssignment(anti_id, "ANTI_TCE", weight))

    return CodingScheme(
        name="tsd",
        version="1.0.0",
        codes=tuple(codes),
        assignments=tuple(assignments),
    )


def validate_scheme(scheme: CodingScheme) -> list[Violation]:
    """Check every scheme invariant; returns an empty list for a valid scheme.

    The report is sorted so that permuting codes or assignments yields the
    same result.
    """
    violations: list[Violation] = []

    seen_ids: set[str] = set()
    for code in scheme.codes:
        if code.id in seen_ids:
            violations.append(
                Violation("duplicate-code-id", code.id, f"code id {code.id!r} appears more than once")
            )
        seen_ids.add(code.id)
        if code.family not in FAMILIES:
            violations.append(
                Violation("invalid-family", code.id, f"code {code.id!r} has unknown family {code.family!r}")
            )
        if code.anti_of is not None:
            target = next((c for c in scheme.codes if c.id == code.anti_of), None)
            if target is None:
                violations.append(
                    Violation(
                        "unknown-anti-target",
                        code.id,
                        f"code {code.id!r} negates missing code {code.anti_of!r}",
                    )
                )
            elif target.family == "ANTI":
                violations.append(
                    Violation(
                        "anti-of-anti",
                        code.id,
                        f"code {code.id!r} negates ANTI-family code {code.anti_of!r}",
                    )
                )

    assigned: set[str] = set()
    for assignment in scheme.assignments:
        if assignment.code_id not in seen_ids:
            violations.append(
                Violation(
                    "unknown-code",
                    assignment.code_id,
                    f"assignment references unknown code {assignment.code_id!r}",
                )
            )
        if assignment.code_id in assigned:
            violations.append(
                Violation(
                    "duplicate-assignment",
                    assignment.code_id,
                    f"code {assignment.code_id!r} has more than one assignment",
                )
            )
        assigned.add(assignment.code_id)
        if assignment.component not in COMPONENTS:
            violations.append(
                Violation(
                    "invalid-component",
                    assignment.code_id,
                    f"assignment for {assignment.code_id!r} has unknown component "
                    f"{assignment.component!r}",
                )
            )
        if not assignment.weight > 0:
            violations.append(
                Violation(
                    "non-positive-weight",
                    assignment.code_id,
                    f"assignment for {assignment.code_id!r} has non-positive weight "
                    f"{assignment.weight}",
                )
            )

    for code in scheme.codes:
        if code.id not in assigned:
            violations.append(
                Violation("unassigned-code", code.id, f"code {code.id!r} has no component assignment")
            )

    return sorted(violations, key=lambda v: (v.kind, v.subject, v.message))


def load_scheme(source: str | bytes | dict) -> CodingScheme:
    """Parse and validate a scheme from JSON text (or an already-parsed dict)."""
    if isinstance(source, (str, bytes)):
        try:
            raw = json.loads(source)
        except json.JSONDecodeError as exc:
            raise SchemeError(f"scheme file is not valid JSON: {exc}") from exc
    else:
        raw = source

    if not isinstance(raw, dict):
        raise SchemeError("scheme file must contain a JSON object")

    try:
        codes = tuple(
            Code(
                id=c["id"],
                name=c["name"],
                description=c["description"],
                family=c["family"],
                anti_of=c.get("anti_of"),
            )
            for c in raw["codes"]
        )
        assignments = tuple(
            ComponentAssignment(
                code_id=a["code_id"],
                component=a["component"],
                weight=a["weight"],
            )
            for a in raw["assignments"]
        )
        scheme = CodingScheme(
            name=raw["name"],
            version=raw["version"],
            codes=codes,
            assignments=assignments,
        )
    except (KeyError, TypeError) as exc:
        raise SchemeError(f"scheme file is missing or mistypes a field: {exc}") from exc

    violations = validate_scheme(scheme)
    if violations:
        summary = "; ".join(v.message for v in violations[:5])
        raise SchemeError(f"scheme failed validation: {summary}", violations)
    return scheme


def load_scheme_file(path: str | Path) -> CodingScheme:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemeError(f"cannot read scheme file {path}: {exc}") from exc
    return load_scheme(text)


def serialize_scheme(scheme: CodingScheme) -> str:
    """Render a scheme as the canonical JSON document (round-trip stable)."""
    payload = {
        "name": scheme.name,
        "version": scheme.version,
        "codes": [
            {
                "id": c.id,
                "name": c.name,
                "description": c.description,
                "family": c.family,
                **({"anti_of": c.anti_of} if c.anti_of is not None else {}),
            }
            for c in scheme.codes
        ],
        "assignments": [
            {"code_id": a.code_id, "component": a.component, "weight": a.weight}
            for a in scheme.assignments
        ],
    }
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def builtin_scheme_text() -> str:
    """Raw text of the bundled scheme file (matches builtin_tsd_scheme())."""
    return resources.files(__package__).joinpath(f"data/{_BUILTIN_RESOURCE}").read_text(
        encoding="utf-8"
    )
