"""PatternRank - unsupervised keyphrase extraction with POS patterns and embeddings."""

__version__ = "0.1.0"
