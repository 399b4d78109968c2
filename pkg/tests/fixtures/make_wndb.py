"""Cut a small WNDB fixture out of a full WordNet 3.0 ``dict`` directory.

Keeps every synset of a handful of seed lemmas, re-numbers synset offsets
to the byte positions in the new data files, drops pointers, and rewrites
the index entries of every member lemma so they only list kept synsets.

    python tests/fixtures/make_wndb.py /path/to/wordnet/dict tests/fixtures/wndb
"""

import sys
from pathlib import Path

SEEDS = ["sad", "back", "comedy", "human", "superior", "road", "life",
         "abeam", "hegira", "abide_by", "galore"]
POS = {"noun": "n", "verb": "v", "adj": "a", "adv": "r"}


def main(src, dst):
    src, dst = Path(src), Path(dst)
    dst.mkdir(parents=True, exist_ok=True)
    for name, pos in POS.items():
        index_lines = (src / f"index.{name}").read_text("utf-8").splitlines(keepends=True)
        data_lines = (src / f"data.{name}").read_text("utf-8").splitlines(keepends=True)
        header = [line for line in data_lines if line.startswith("  ")][:5]
        data = {line.split(" ", 1)[0]: line for line in data_lines if not line.startswith(" ")}
        index = {line.split(" ", 1)[0]: line for line in index_lines if not line.startswith(" ")}

        keep = []
        for lemma in SEEDS:
            if lemma in index:
                keep.extend(index[lemma].split()[-int(index[lemma].split()[2]):])
        keep = sorted(set(keep))

        members = set()
        records = []
        for off in keep:
            f = data[off].split(" | ")[0].split()
            gloss = data[off].split(" | ", 1)[1] if " | " in data[off] else "\n"
            w_cnt = int(f[3], 16)
            words = f[4:4 + 2 * w_cnt]
            p_cnt = int(f[4 + 2 * w_cnt])
            frames = f[5 + 2 * w_cnt + 4 * p_cnt:]
            for w in words[::2]:
                members.add(w.split("(")[0].lower())
            records.append((off, f[1], f[2], words, frames, gloss))

        pos_offset = sum(len(h.encode()) for h in header)
        renumber = {}
        body = []
        for off, lex, ss_type, words, frames, gloss in records:
            new = f"{pos_offset:08d}"
            renumber[off] = new
            line = " ".join([new, lex, ss_type, f"{len(words) // 2:02x}", *words, "000", *frames])
            line = f"{line} | {gloss}"
            body.append(line)
            pos_offset += len(line.encode())
        (dst / f"data.{name}").write_text("".join(header + body), "utf-8")

        out = []
        for lemma in sorted(members):
            if lemma not in index:
                continue
            f = index[lemma].split()
            p_cnt = int(f[3])
            offs = [renumber[o] for o in f[6 + p_cnt:] if o in renumber]
            if not offs:
                continue
            line = " ".join([f[0], f[1], str(len(offs)), *f[3:4 + p_cnt], str(len(offs)), "0", *offs])
            out.append(line + "  \n")
        (dst / f"index.{name}").write_text("".join(header + out), "utf-8")


if __name__ == "__main__":
    main(*sys.argv[1:3])
