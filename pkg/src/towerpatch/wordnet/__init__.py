"""WordNet 3.0 database parsing and the lexical queries behind REPLACE."""

from towerpatch.wordnet.db import (
    ANTONYM,
    HYPERNYM,
    INSTANCE_HYPERNYM,
    PartOfSpeech,
    Synset,
    SynsetId,
    WordNetDB,
    load_wordnet,
)
from towerpatch.wordnet.queries import (
    replacement_candidates,
    shares_synset,
    synsets_of,
)
from towerpatch.wordnet.writer import SynsetDraft, write_database

__all__ = [
    "ANTONYM",
    "HYPERNYM",
    "INSTANCE_HYPERNYM",
    "PartOfSpeech",
    "Synset",
    "SynsetDraft",
    "SynsetId",
    "WordNetDB",
    "load_wordnet",
    "replacement_candidates",
    "shares_synset",
    "synsets_of",
    "write_database",
]
