"""Executable model of a privacy-preserving cloud eID ecosystem.

The package provides the cryptographic primitives (digital signatures,
hybrid encryption, redactable signatures, identity-based proxy
re-encryption), the identity data model (sourcePINs, sector-specific
PINs, identity links, mandates, registers), actor state machines for the
three authentication use cases, a deterministic message-bus harness with
honest-but-curious observers, and an auditor that turns the recorded
observations into a machine-checked disclosure comparison.
"""

__version__ = "0.1.0"
