"""Hall subgroups of finite simple groups: arithmetic oracle plus brute-force engine."""

__version__ = "0.1.0"
