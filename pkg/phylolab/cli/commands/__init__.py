from . import (
    analyze, build, check, construct, enumeration, forbidden, holes, realize, statements, verify,
)

__all__ = [
    "analyze", "build", "check", "construct", "enumeration", "forbidden", "holes", "realize",
    "statements", "verify",
]
