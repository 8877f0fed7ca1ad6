#!/usr/bin/env python3
"""Writes the synthetic list-file corpus used by the tests.

Director talent drives each movie's rating; budget is only loosely tied to
it. Box-office totals are roughly linear in budget. Output is fully
determined by SEED, so rerunning reproduces the committed files.
"""

import argparse
import pathlib
import random

SEED = 20110101

DIRECTORS = [
    ("Abrams, Cora", 8.6), ("Baxter, Leon", 8.1), ("Calder, Ines", 7.8),
    ("Duarte, Marco", 6.9), ("Ellery, Ruth", 6.3), ("Fowler, Dean", 5.6),
    ("Garrow, Tess", 4.6), ("Hale, Omar", 3.9), ("Ivers, Paula", 3.1),
    ("Jost, Victor", 2.1), ("Kline, Nora", 1.6), ("Lund, Felix", 5.1),
]
ACTORS = [f"Actor, No{i:02d}" for i in range(1, 16)]
ACTRESSES = [f"Actress, No{i:02d}" for i in range(1, 11)]
WORDS = ["Amber", "Blue", "Cold", "Dark", "Echo", "Far", "Grey", "High", "Iron",
         "Jade", "Kings", "Lost", "Moon", "Night", "Open", "Pale", "Quiet", "Red",
         "Silver", "True", "Under", "Vast", "White", "Young"]
NOUNS = ["River", "Harbor", "Signal", "Garden", "Road", "Winter", "Tower", "Field"]


def fmt_money(amount):
    return f"{amount:,}"


def make(out_dir: pathlib.Path):
    rng = random.Random(SEED)
    titles = iter(sorted({f"{w} {n}" for w in WORDS for n in NOUNS}))
    movies = []  # (key, talent, director)
    for director, talent in DIRECTORS:
        for _ in range(7):
            year = rng.randint(2001, 2010)
            movies.append((f"{next(titles)} ({year})", talent, director))

    rated = []
    for key, talent, director in movies:
        rating = min(10.0, max(1.0, round(talent + rng.uniform(-0.45, 0.45), 1)))
        votes = rng.randint(1000, 250000)
        rated.append((key, director, rating, votes, talent))

    # Entries every filter must reject.
    extras = [
        ('"Some Show" (2004)', ""), ("Straight to Disc (2005)", "(V)"),
        ("Late Night Special (2006)", "(TV)"), ("Pixel Quest (2007)", "(VG)"),
        ("Old Classic (1999)", ""), ("Next Decade (2011)", ""),
        ("Small Crowd (2005)", ""), ("Paris Nights (2006)", ""),
    ]
    twin = "Same Title (2005/II)"

    lines = ["# synthetic movies list", ""]
    lines += [m[0] for m in movies]
    lines += [f"{k} {s}".rstrip() for k, s in extras]
    lines += ["Same Title (2005)", twin, "this line is malformed"]
    (out_dir / "movies.list").write_text("\n".join(lines) + "\n")

    rows = [f"{votes} {rating:.1f} {key}" for key, _, rating, votes, _ in rated]
    rows += ["5200 6.1 Old Classic (1999)", "8100 7.0 Next Decade (2011)",
             "420 8.8 Small Crowd (2005)", "9100 7.7 Paris Nights (2006)",
             "15000 6.6 Straight to Disc (2005)", "30000 8.2 \"Some Show\" (2004)",
             "2500 6.0 Same Title (2005)", f"3100 4.4 {twin}", "12 0.5 Bad Rating (2002)"]
    (out_dir / "ratings.list").write_text("\n".join(rows) + "\n")

    by_director = {}
    for key, _, director in movies:
        by_director.setdefault(director, []).append(key)
    blocks = []
    for director in sorted(by_director):
        keys = sorted(by_director[director])
        blocks.append("\n".join([f"{director}\t{keys[0]}"] + [f"\t{k}" for k in keys[1:]]))
    blocks.append(f"Mystery, Person\t{twin}")
    (out_dir / "directors.list").write_text("\n\n".join(blocks) + "\n")

    for name, pool, per_movie in (("actors", ACTORS, 2), ("actresses", ACTRESSES, 1)):
        cast = {}
        for key, _, _ in movies:
            for person in rng.sample(pool, per_movie):
                cast.setdefault(person, []).append(key)
        blocks = []
        for person in sorted(cast):
            keys = sorted(cast[person])
            blocks.append("\n".join([f"{person}\t{keys[0]}"] + [f"\t{k}" for k in keys[1:]]))
        (out_dir / f"{name}.list").write_text("\n\n".join(blocks) + "\n")

    countries, languages = [], []
    for key, _, _ in movies:
        countries.append(f"{key}\tUSA")
        languages.append(f"{key}\tEnglish")
    countries[3] += "\n" + movies[3][0] + "\tCanada"
    for key, _ in extras:
        countries.append(f"{key}\tUSA")
        languages.append(f"{key}\tEnglish")
    countries.append("Paris Nights (2006)\tFrance")
    countries.remove("Paris Nights (2006)\tUSA")
    languages.remove("Paris Nights (2006)\tEnglish")
    languages.append("Paris Nights (2006)\tFrench")
    (out_dir / "countries.list").write_text("\n".join(countries) + "\n")
    (out_dir / "language.list").write_text("\n".join(languages) + "\n")

    business = []
    csv = ["title,year,budget,domestic,foreign,worldwide"]
    for i, (key, director, rating, votes, talent) in enumerate(rated):
        budget = int(round(rng.uniform(8, 120) + talent * 2, 0)) * 1_000_000
        if i % 11 == 5:
            continue  # no budget information at all
        entry = [f"MV: {key}", ""]
        if i % 13 == 2:
            entry.append(f"BT: EUR {fmt_money(budget // 2)}")
        note = " (estimated)" if i % 3 == 0 else ""
        entry.append(f"BT: USD {fmt_money(budget)}{note}")
        entry.append(f"GR: USD {fmt_money(budget * 2)} (USA)")
        business.append("\n".join(entry))
        if i % 7 == 4:
            continue  # no box-office row
        domestic = int(budget * rng.uniform(0.9, 1.3))
        foreign = int(budget * rng.uniform(0.7, 1.1))
        title, year = key[:-7], key[-5:-1]
        csv.append(f"{title},{year},{budget},{domestic},{foreign},{domestic + foreign}")
    (out_dir / "business.list").write_text("\n\n".join(business) + "\n")
    (out_dir / "boxoffice.csv").write_text("\n".join(csv) + "\n")

    (out_dir / "corpus.conf").write_text(
        "# fixture corpus; paths are relative to this file\n"
        "movies = movies.list\nratings = ratings.list\ndirectors = directors.list\n"
        "actors = actors.list\nactresses = actresses.list\ncountries = countries.list\n"
        "languages = language.list\nbusiness = business.list\nboxoffice = boxoffice.csv\n"
        "seed = 1\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out", type=pathlib.Path)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    make(args.out)


if __name__ == "__main__":
    main()
