"""Lexical queries over a loaded :class:`WordNetDB`."""

from __future__ import annotations

from towerpatch.wordnet.db import PartOfSpeech, SynsetId, WordNetDB


def synsets_of(db: WordNetDB, lemma: str, pos: PartOfSpeech) -> list[SynsetId]:
    """Synset ids containing ``lemma``, in index-file order.

    Lookup is case-insensitive; spaces are folded to the underscores WordNet
    uses for multi-word lemmas.
    """
    key = lemma.lower().replace(" ", "_")
    return list(db.lemma_index.get((key, pos), ()))


def shares_synset(db: WordNetDB, lemma_a: str, lemma_b: str,
                  pos: PartOfSpeech) -> bool:
    """True iff some synset contains both lemmas; the synonym veto."""
    ids_a = synsets_of(db, lemma_a, pos)
    if not ids_a:
        return False
    return bool(set(ids_a) & set(synsets_of(db, lemma_b, pos)))


def _up(db: WordNetDB, start: SynsetId, levels: int) -> set[SynsetId]:
    """Ancestors reachable within ``levels`` hypernym hops (cycle-safe)."""
    seen: set[SynsetId] = set()
    frontier = {start}
    for _ in range(levels):
        nxt = set()
        for sid in frontier:
            for h in db.synsets[sid].hypernyms:
                if h != start and h not in seen:
                    nxt.add(h)
        seen |= nxt
        frontier = nxt
    return seen


def _down(db: WordNetDB, start: SynsetId, levels: int) -> set[SynsetId]:
    """Descendants reachable within ``levels`` hyponym hops (cycle-safe)."""
    seen: set[SynsetId] = set()
    frontier = {start}
    for _ in range(levels):
        nxt = set()
        for sid in frontier:
            for c in db.children.get(sid, ()):
                if c != start and c not in seen:
                    nxt.add(c)
        seen |= nxt
        frontier = nxt
    return seen


def replacement_candidates(db: WordNetDB, lemma: str,
                           pos: PartOfSpeech) -> list[str]:
    """Single-word replacement candidates for ``lemma``: its antonyms plus
    lemmas of synsets that share an ancestor within two hypernym levels.

    Both direct co-hyponyms and grand-co-hyponyms qualify.  The input lemma,
    multi-word lemmas, and anything sharing a synset with the input (i.e.
    potential synonyms) are excluded.  Output is deduplicated and sorted.
    """
    src_ids = synsets_of(db, lemma, pos)
    if not src_ids:
        return []
    src_set = set(src_ids)
    lemma_lc = lemma.lower()

    found: set[str] = set()
    for sid in src_ids:
        for member, _target_id, target_lemma in db.synsets[sid].antonym_pairs:
            if member.lower() == lemma_lc:
                found.add(target_lemma.lower())

    ancestors: set[SynsetId] = set()
    for sid in src_ids:
        ancestors |= _up(db, sid, 2)
    siblings: set[SynsetId] = set()
    for aid in ancestors:
        siblings |= _down(db, aid, 2)
    siblings -= src_set
    for sid in siblings:
        for word in db.synsets[sid].lemmas:
            found.add(word.lower())

    out = []
    for cand in found:
        if cand == lemma_lc or not cand.isalpha():
            continue
        if shares_synset(db, cand, lemma_lc, pos):
            continue
        out.append(cand)
    return sorted(out)
