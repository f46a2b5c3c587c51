"""Strict parser for the WordNet 3.0 ``data.*`` / ``index.*`` file pairs.

Synset ids are ``(part of speech, 8-digit offset)`` pairs.  Offsets are
treated as opaque ids; we never seek into the files by byte position, so
hand-built miniature databases remain valid as long as ids are consistent.
Adjective satellite synsets (``s`` type code) are folded into the adjective
part of speech, which is also how pointers reference them.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from pathlib import Path

from towerpatch.errors import MissingFile, ParseError


class PartOfSpeech(enum.Enum):
    NOUN = "n"
    VERB = "v"
    ADJ = "a"
    ADV = "r"


SynsetId = tuple[PartOfSpeech, int]

HYPERNYM = "@"
INSTANCE_HYPERNYM = "@i"
ANTONYM = "!"

# file name suffix per part of speech
FILE_KEYS = {
    PartOfSpeech.NOUN: "noun",
    PartOfSpeech.VERB: "verb",
    PartOfSpeech.ADJ: "adj",
    PartOfSpeech.ADV: "adv",
}

# synset type codes as they appear in data files and pointer fields
_POS_CODES = {
    "n": PartOfSpeech.NOUN,
    "v": PartOfSpeech.VERB,
    "a": PartOfSpeech.ADJ,
    "s": PartOfSpeech.ADJ,
    "r": PartOfSpeech.ADV,
}

# adjective syntactic-position markers, e.g. "galore(ip)"
_MARKER_RE = re.compile(r"\((a|p|ip)\)$")

_OFFSET_RE = re.compile(r"^\d{8}$")


@dataclass(frozen=True)
class Synset:
    """One synonym set: its member lemmas plus the pointers we retain."""

    id: SynsetId
    pos: PartOfSpeech
    lemmas: tuple[str, ...]
    hypernyms: tuple[SynsetId, ...]
    # (member lemma, target synset id, target lemma)
    antonym_pairs: tuple[tuple[str, SynsetId, str], ...]


@dataclass(frozen=True)
class WordNetDB:
    """Fully indexed database; immutable after load, safe for shared reads."""

    synsets: dict[SynsetId, Synset]
    lemma_index: dict[tuple[str, PartOfSpeech], tuple[SynsetId, ...]]
    # hypernym pointers inverted at load time, for co-hyponym traversal
    children: dict[SynsetId, tuple[SynsetId, ...]]


@dataclass
class _RawSynset:
    id: SynsetId
    pos: PartOfSpeech
    lemmas: tuple[str, ...]
    hypernyms: list[SynsetId]
    # (member word number, target id, target word number), unresolved
    antonyms: list[tuple[int, SynsetId, int]]
    path: Path
    line_no: int


def _strip_marker(word: str) -> str:
    return _MARKER_RE.sub("", word)


def _parse_offset(tok: str, path: Path, line_no: int) -> int:
    if not _OFFSET_RE.match(tok):
        raise ParseError(path, line_no, f"malformed synset offset {tok!r}")
    return int(tok, 10)


def _parse_data_line(path: Path, line_no: int, line: str,
                     file_pos: PartOfSpeech) -> _RawSynset:
    head, sep, _gloss = line.partition(" | ")
    if not sep:
        raise ParseError(path, line_no, "missing gloss separator '|'")
    fields = head.split()
    if len(fields) < 5:
        raise ParseError(path, line_no, "too few fields")
    it = iter(fields)

    def take(what: str) -> str:
        try:
            return next(it)
        except StopIteration:
            raise ParseError(path, line_no, f"truncated line: expected {what}") from None

    offset = _parse_offset(take("synset offset"), path, line_no)
    lexfile = take("lex file number")
    if not re.match(r"^\d{2}$", lexfile):
        raise ParseError(path, line_no, f"malformed lex file number {lexfile!r}")
    ss_type = take("synset type")
    pos = _POS_CODES.get(ss_type)
    if pos is None or pos is not file_pos:
        raise ParseError(path, line_no, f"unexpected synset type {ss_type!r}")

    w_cnt_tok = take("word count")
    try:
        w_cnt = int(w_cnt_tok, 16)
    except ValueError:
        raise ParseError(path, line_no, f"malformed hex word count {w_cnt_tok!r}") from None
    if w_cnt < 1:
        raise ParseError(path, line_no, "synset has no words")
    lemmas = []
    for _ in range(w_cnt):
        lemmas.append(_strip_marker(take("word")))
        lex_id = take("lex id")
        try:
            int(lex_id, 16)
        except ValueError:
            raise ParseError(path, line_no, f"malformed lex id {lex_id!r}") from None

    p_cnt_tok = take("pointer count")
    if not re.match(r"^\d{3}$", p_cnt_tok):
        raise ParseError(path, line_no, f"malformed pointer count {p_cnt_tok!r}")
    hypernyms: list[SynsetId] = []
    antonyms: list[tuple[int, SynsetId, int]] = []
    for _ in range(int(p_cnt_tok, 10)):
        symbol = take("pointer symbol")
        target_off = _parse_offset(take("pointer offset"), path, line_no)
        target_pos = _POS_CODES.get(take("pointer pos"))
        if target_pos is None:
            raise ParseError(path, line_no, "malformed pointer part of speech")
        src_tgt = take("pointer source/target")
        if not re.match(r"^[0-9a-f]{4}$", src_tgt):
            raise ParseError(path, line_no, f"malformed source/target {src_tgt!r}")
        target_id = (target_pos, target_off)
        if symbol in (HYPERNYM, INSTANCE_HYPERNYM):
            # retained for noun/verb only (the invariant the data obeys anyway)
            if pos in (PartOfSpeech.NOUN, PartOfSpeech.VERB):
                hypernyms.append(target_id)
        elif symbol == ANTONYM:
            antonyms.append((int(src_tgt[:2], 16), target_id, int(src_tgt[2:], 16)))

    if pos is PartOfSpeech.VERB:
        f_cnt_tok = take("frame count")
        if not re.match(r"^\d{2}$", f_cnt_tok):
            raise ParseError(path, line_no, f"malformed frame count {f_cnt_tok!r}")
        for _ in range(int(f_cnt_tok, 10)):
            if take("frame marker") != "+":
                raise ParseError(path, line_no, "expected '+' before frame")
            take("frame number")
            take("frame word number")

    leftover = list(it)
    if leftover:
        raise ParseError(path, line_no, f"unexpected trailing fields {leftover[:3]!r}")

    return _RawSynset((pos, offset), pos, tuple(lemmas), hypernyms, antonyms,
                      path, line_no)


def _parse_index_line(path: Path, line_no: int, line: str,
                      file_pos: PartOfSpeech) -> tuple[str, list[int]]:
    fields = line.split()
    if len(fields) < 6:
        raise ParseError(path, line_no, "too few fields")
    lemma, pos_code, synset_cnt_tok, p_cnt_tok = fields[:4]
    if _POS_CODES.get(pos_code) is not file_pos:
        raise ParseError(path, line_no, f"unexpected pos code {pos_code!r}")
    try:
        synset_cnt = int(synset_cnt_tok, 10)
        p_cnt = int(p_cnt_tok, 10)
    except ValueError:
        raise ParseError(path, line_no, "malformed count field") from None
    expected = 4 + p_cnt + 2 + synset_cnt
    if len(fields) != expected:
        raise ParseError(path, line_no,
                         f"field count {len(fields)} != expected {expected}")
    offsets = [_parse_offset(tok, path, line_no) for tok in fields[4 + p_cnt + 2:]]
    if not offsets:
        raise ParseError(path, line_no, "index entry lists no synsets")
    return lemma, offsets


def _read_lines(path: Path):
    """Yield (line number, line) skipping the two-space license header."""
    with open(path, encoding="latin-1") as fh:
        for line_no, line in enumerate(fh, start=1):
            if line.startswith("  ") or not line.strip():
                continue
            yield line_no, line.rstrip("\n")


def load_wordnet(dir_path) -> WordNetDB:
    """Parse the eight standard database files under ``dir_path``.

    Parsing is strict: any malformed data line aborts with :class:`ParseError`
    carrying the file and line number; absent files raise :class:`MissingFile`.
    """
    root = Path(dir_path)
    for pos, key in FILE_KEYS.items():
        for prefix in ("data", "index"):
            p = root / f"{prefix}.{key}"
            if not p.is_file():
                raise MissingFile(str(p))

    raw: dict[SynsetId, _RawSynset] = {}
    for pos, key in FILE_KEYS.items():
        path = root / f"data.{key}"
        for line_no, line in _read_lines(path):
            syn = _parse_data_line(path, line_no, line, pos)
            if syn.id in raw:
                raise ParseError(path, line_no, f"duplicate synset id {syn.id}")
            raw[syn.id] = syn

    # resolve pointers now that every synset is known
    synsets: dict[SynsetId, Synset] = {}
    children: dict[SynsetId, list[SynsetId]] = {}
    for syn in raw.values():
        for target in syn.hypernyms:
            if target not in raw:
                raise ParseError(syn.path, syn.line_no,
                                 f"dangling hypernym pointer to {target}")
            children.setdefault(target, []).append(syn.id)
        pairs = []
        for src_num, target_id, tgt_num in syn.antonyms:
            target = raw.get(target_id)
            if target is None:
                raise ParseError(syn.path, syn.line_no,
                                 f"dangling antonym pointer to {target_id}")
            member = syn.lemmas[src_num - 1 if src_num else 0]
            if tgt_num > len(target.lemmas):
                raise ParseError(syn.path, syn.line_no,
                                 f"antonym word number {tgt_num} out of range")
            pairs.append((member, target_id, target.lemmas[tgt_num - 1 if tgt_num else 0]))
        synsets[syn.id] = Synset(syn.id, syn.pos, syn.lemmas, tuple(syn.hypernyms),
                                 tuple(pairs))

    lemma_index: dict[tuple[str, PartOfSpeech], tuple[SynsetId, ...]] = {}
    for pos, key in FILE_KEYS.items():
        path = root / f"index.{key}"
        for line_no, line in _read_lines(path):
            lemma, offsets = _parse_index_line(path, line_no, line, pos)
            ids = []
            for off in offsets:
                sid = (pos, off)
                syn = synsets.get(sid)
                if syn is None:
                    raise ParseError(path, line_no,
                                     f"index references missing synset {off:08d}")
                if lemma not in (w.lower() for w in syn.lemmas):
                    raise ParseError(path, line_no,
                                     f"synset {off:08d} does not contain {lemma!r}")
                ids.append(sid)
            lemma_index[(lemma, pos)] = tuple(ids)

    return WordNetDB(synsets, lemma_index,
                     {k: tuple(v) for k, v in children.items()})
