"""mediawatch: keyword-driven monitoring of social media and digital press."""

__version__ = "0.1.0"
