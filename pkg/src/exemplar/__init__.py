"""Retrieval of in-context demonstrations, trained from generator feedback.

Pipeline: lexical candidate selection, generator-scored ranking, a
tree-augmented dual encoder trained with contrastive and ranking losses,
exact dense retrieval, and token-budgeted prompt assembly.
"""

__version__ = "0.1.0"
