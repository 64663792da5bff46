"""chemforge: compile seed molecules, reactions, and property tables into
a multimodal instruction-tuning corpus, and score model predictions on it.
"""

__version__ = "0.1.0"
