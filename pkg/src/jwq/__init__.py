"""Jones-Wenzl idempotents at roots of unity, solid-torus skein operators and the restricted quantum group."""
__version__ = "0.1.0"
