"""Certificate records for verification outcomes.

A certificate ties a named statement to the computed evidence.  The canonical
payload (statement, status, parameters, evidence, schema version, toolchain)
is serialized as sorted-key JSON and must be byte-identical across reruns and
worker counts; volatile data (timings, worker count) lives in a separate
"run" section excluded from the canonical bytes and their hash.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

__all__ = [
    "SCHEMA_VERSION",
    "STATEMENTS",
    "VERIFIED",
    "FALSIFIED",
    "CheckResult",
    "Certificate",
    "canonical_json",
    "toolchain_fingerprint",
    "default_cert_dir",
]

SCHEMA_VERSION = "1.0"

VERIFIED = "Verified"
FALSIFIED = "Falsified"

STATEMENTS = (
    "theorem-1.1",
    "theorem-4.1",
    "lemma-3.1-facts",
    "lemma-4.2-facts",
    "prop-2.2-branching",
    "prop-3.2",
    "prop-3.3",
    "prop-4.3",
    "prop-4.4",
)

_CERT_DIR_ENV = "CHERN_CERT_DIR"


@dataclass
class CheckResult:
    """Outcome of one statement-level check, before certificate wrapping."""

    statement: str
    status: str
    parameters: dict
    evidence: dict

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED


def canonical_json(obj) -> str:
    """Deterministic JSON text: sorted keys, no whitespace, ASCII only."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def toolchain_fingerprint() -> dict:
    import numpy

    from . import __version__

    return {
        "package": "chern-cert",
        "package_version": __version__,
        "python": sys.version.split()[0],
        "numpy": numpy.__version__,
    }


def default_cert_dir() -> Path:
    return Path(os.environ.get(_CERT_DIR_ENV, "certs"))


@dataclass
class Certificate:
    statement: str
    status: str
    parameters: dict
    evidence: dict
    schema_version: str = SCHEMA_VERSION
    toolchain: dict = field(default_factory=toolchain_fingerprint)
    run: dict = field(default_factory=dict)

    @classmethod
    def from_result(cls, result: CheckResult, run: "dict | None" = None) -> "Certificate":
        if result.statement not in STATEMENTS:
            raise ValueError(f"unknown statement {result.statement!r}")
        if result.status not in (VERIFIED, FALSIFIED):
            raise ValueError(f"unknown status {result.status!r}")
        return cls(
            statement=result.statement,
            status=result.status,
            parameters=result.parameters,
            evidence=result.evidence,
            run=dict(run or {}),
        )

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    def payload(self) -> dict:
        """The canonical part of the certificate (run section excluded)."""
        return {
            "schema_version": self.schema_version,
            "statement": self.statement,
            "status": self.status,
            "parameters": self.parameters,
            "evidence": self.evidence,
            "toolchain": self.toolchain,
        }

    def canonical_bytes(self) -> bytes:
        return canonical_json(self.payload()).encode("ascii")

    def sha256(self) -> str:
        return hashlib.sha256(self.canonical_bytes()).hexdigest()

    def to_dict(self) -> dict:
        out = self.payload()
        out["canonical_sha256"] = self.sha256()
        out["run"] = self.run
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=True)

    def write(self, path: "Path | str") -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json() + "\n", encoding="ascii")
        return path

    @classmethod
    def load(cls, path: "Path | str") -> "Certificate":
        """Read a certificate file; unknown future fields are ignored."""
        raw = json.loads(Path(path).read_text(encoding="ascii"))
        return cls(
            statement=raw["statement"],
            status=raw["status"],
            parameters=raw.get("parameters", {}),
            evidence=raw.get("evidence", {}),
            schema_version=raw.get("schema_version", SCHEMA_VERSION),
            toolchain=raw.get("toolchain", {}),
            run=raw.get("run", {}),
        )


def default_cert_path(statement: str) -> Path:
    return default_cert_dir() / f"{statement}.json"
