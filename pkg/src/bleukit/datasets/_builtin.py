# Built-in test-set registry.
#
# Each entry: archive URLs with checksums, and per language pair the archive
# members (source first, then one or more references).  Segment counts are
# pinned where known; ``None`` means "all roles must agree" only.

_WMT_CITATION = "Findings of the {year} {venue} (WMT{yy})"


def _citation(year, venue="Conference on Machine Translation"):
    return _WMT_CITATION.format(year=year, venue=venue, yy=str(year)[2:])


def _pairs(template, pairs):
    """Members for 'newstestYYYY-xxyy-{src,ref}.LL.sgm'-style layouts."""
    out = {}
    for pair in pairs:
        src, tgt = pair.split("-")
        block = template.format(a=src, b=tgt)
        out[pair] = [f"{block}-src.{src}.sgm", f"{block}-ref.{tgt}.sgm"]
    return out


def _old_style(prefix, langs, en="en", code=None):
    """Members for 'newstestYYYY-src.LL.sgm' layouts (one file per language)."""
    code = code or {}
    out = {}
    for lang in langs:
        fl = code.get(lang, lang)
        out[f"{lang}-{en}"] = [f"{prefix}-src.{fl}.sgm", f"{prefix}-src.{en}.sgm"]
        out[f"{en}-{lang}"] = [f"{prefix}-src.{en}.sgm", f"{prefix}-src.{fl}.sgm"]
    return out


def _wmt14(root):
    out = {}
    for lang in ("cs", "de", "fr", "hi", "ru"):
        stem = f"{root}/newstest2014-{lang}en"
        out[f"{lang}-en"] = [f"{stem}-src.{lang}.sgm", f"{stem}-ref.en.sgm"]
        out[f"en-{lang}"] = [f"{stem}-src.en.sgm", f"{stem}-ref.{lang}.sgm"]
    return out


_WMT17_PAIRS = ["cs-en", "de-en", "en-cs", "en-de", "en-fi", "en-lv", "en-ru", "en-tr",
                "en-zh", "fi-en", "lv-en", "ru-en", "tr-en", "zh-en"]
_WMT17 = _pairs("test/newstest2017-{a}{b}", _WMT17_PAIRS)
_WMT17["en-fi"].append("test/newstestB2017-enfi-ref.fi.sgm")

_IWSLT17_PAIRS = ["en-fr", "fr-en", "en-de", "de-en", "en-zh", "zh-en",
                  "en-ar", "ar-en", "en-ja", "ja-en", "en-ko", "ko-en"]


def _iwslt17():
    out = {}
    for pair in _IWSLT17_PAIRS:
        src, tgt = pair.split("-")
        out[pair] = [f"{src}-{tgt}/IWSLT17.TED.tst2017.{src}-{tgt}.{src}.xml",
                     f"{tgt}-{src}/IWSLT17.TED.tst2017.{tgt}-{src}.{tgt}.xml"]
    return out


BUILTIN = [
    {
        "name": "wmt08",
        "urls": ["https://www.statmt.org/wmt08/test.tgz"],
        "checksums": ["md5:0582e4e894a3342044059c894e1aea3d"],
        "description": "Official evaluation data.",
        "citation": _citation(2008, "Workshop on Statistical Machine Translation"),
        "pairs": _old_style("test/newstest2008", ["cs", "de", "es", "fr", "hu"], code={"cs": "cz"}),
        "counts": {},
    },
    {
        "name": "wmt09",
        "urls": ["https://www.statmt.org/wmt09/test.tgz"],
        "checksums": ["md5:da227abfbd7b666ec175b742a0d27b37"],
        "description": "Official evaluation data.",
        "citation": _citation(2009, "Workshop on Statistical Machine Translation"),
        "pairs": _old_style("test/newstest2009", ["cs", "de", "es", "fr", "hu", "it"], code={"cs": "cz"}),
        "counts": {},
    },
    {
        "name": "wmt10",
        "urls": ["https://www.statmt.org/wmt10/test.tgz"],
        "checksums": ["md5:491cb885a355da5a23ea66e7b3024d5c"],
        "description": "Official evaluation data.",
        "citation": _citation(2010, "Joint Workshop on Statistical Machine Translation and MetricsMATR"),
        "pairs": _old_style("test/newstest2010", ["cs", "de", "es", "fr"], code={"cs": "cz"}),
        "counts": {},
    },
    {
        "name": "wmt11",
        "urls": ["https://www.statmt.org/wmt11/test.tgz"],
        "checksums": ["md5:b0c9680adf32d394aefc2b24e3a5937e"],
        "description": "Official evaluation data.",
        "citation": _citation(2011, "Workshop on Statistical Machine Translation"),
        "pairs": _old_style("newstest2011", ["cs", "de", "es", "fr"]),
        "counts": {},
    },
    {
        "name": "wmt12",
        "urls": ["https://www.statmt.org/wmt12/test.tgz"],
        "checksums": ["md5:608232d34ebc4ba2ff70fead45674e47"],
        "description": "Official evaluation data.",
        "citation": _citation(2012, "Workshop on Statistical Machine Translation"),
        "pairs": _old_style("test/newstest2012", ["cs", "de", "es", "fr"]),
        "counts": {},
    },
    {
        "name": "wmt13",
        "urls": ["https://www.statmt.org/wmt13/test.tgz"],
        "checksums": ["md5:48eca5d02f637af44e85186847141f67"],
        "description": "Official evaluation data.",
        "citation": _citation(2013, "Workshop on Statistical Machine Translation"),
        "pairs": _old_style("test/newstest2013", ["cs", "de", "es", "fr", "ru"]),
        "counts": {},
    },
    {
        "name": "wmt14",
        "urls": ["https://www.statmt.org/wmt14/test-filtered.tgz"],
        "checksums": ["md5:84c597844c1542e29c2aff23aaee4310"],
        "description": "Official evaluation data (filtered after problems found during the evaluation).",
        "citation": _citation(2014, "Workshop on Statistical Machine Translation"),
        "pairs": _wmt14("test"),
        "counts": {"en-de": 2737},
    },
    {
        "name": "wmt14/full",
        "urls": ["https://www.statmt.org/wmt14/test-full.tgz"],
        "checksums": ["md5:a8cd784e006feb32ac6f3d9ec7eb389a"],
        "description": "Full evaluation data, released after the official evaluation.",
        "citation": _citation(2014, "Workshop on Statistical Machine Translation"),
        "pairs": _wmt14("test-full"),
        "counts": {"en-de": 3004},
    },
    {
        "name": "wmt15",
        "urls": ["https://www.statmt.org/wmt15/test.tgz"],
        "checksums": ["md5:67e3beca15e69fe3d36de149da0a96df"],
        "description": "Official evaluation data.",
        "citation": _citation(2015, "Workshop on Statistical Machine Translation"),
        "pairs": {
            **_pairs("test/newsdiscusstest2015-{a}{b}", ["en-fr", "fr-en"]),
            **_pairs("test/newstest2015-{a}{b}",
                     ["cs-en", "de-en", "en-cs", "en-de", "en-fi", "en-ru", "fi-en", "ru-en"]),
        },
        "counts": {},
    },
    {
        "name": "wmt16",
        "urls": ["https://data.statmt.org/wmt16/translation-task/test.tgz"],
        "checksums": ["md5:3d809cd0c2c86adb2c67034d15c4e446"],
        "description": "Official evaluation data.",
        "citation": _citation(2016),
        "pairs": _pairs("test/newstest2016-{a}{b}",
                        ["cs-en", "de-en", "en-cs", "en-de", "en-fi", "en-ro", "en-ru", "en-tr",
                         "fi-en", "ro-en", "ru-en", "tr-en"]),
        "counts": {},
    },
    {
        "name": "wmt17",
        "urls": ["https://data.statmt.org/wmt17/translation-task/test.tgz"],
        "checksums": ["md5:86a1724c276004aa25455ae2a04cef26"],
        "description": "Official evaluation data; en-fi has two references.",
        "citation": _citation(2017),
        "pairs": _WMT17,
        "counts": {
            "cs-en": 3005, "en-cs": 3005, "de-en": 3004, "en-de": 3004,
            "en-fi": 3002, "fi-en": 3002, "en-lv": 2001, "lv-en": 2001,
            "en-ru": 3001, "ru-en": 3001, "en-tr": 3007, "tr-en": 3007,
            "en-zh": 2001, "zh-en": 2001,
        },
    },
    {
        "name": "wmt18",
        "urls": ["https://data.statmt.org/wmt18/translation-task/test.tgz"],
        "checksums": ["md5:f996c245ecffea23d0006fa4c34e9064"],
        "description": "Official evaluation data.",
        "citation": _citation(2018),
        "pairs": _pairs("test/newstest2018-{a}{b}",
                        ["cs-en", "de-en", "en-cs", "en-de", "en-et", "en-fi", "en-ru", "et-en",
                         "fi-en", "ru-en", "en-tr", "tr-en", "en-zh", "zh-en"]),
        "counts": {},
    },
    {
        "name": "iwslt17",
        "urls": [f"https://wit3.fbk.eu/archive/2017-01-ted-test/texts/{p.split('-')[0]}/{p.split('-')[1]}/{p}.tgz"
                 for p in _IWSLT17_PAIRS],
        "checksums": [
            "md5:1849bcc3b006dc0642a8843b11aa7192", "md5:79bf7a2ef02d226875f55fb076e7e473",
            "md5:b68e7097b179491f6c466ef41ad72b9b", "md5:e3f5b2a075a2da1a395c8b60bf1e9be1",
            "md5:975a858783a0ebec8c57d83ddd5bd381", "md5:cc51d9b7fe1ff2af858c6a0dd80b8815",
            "md5:ecdc6bc4ab4c8984e919444f3c05183a", "md5:4b5141d14b98706c081371e2f8afe0ca",
            "md5:d957ee79de1f33c89077d37c5a2c5b06", "md5:c213e8bb918ebf843543fe9fd2e33db2",
            "md5:59f6a81c707378176e9ad8bb8d811f5f", "md5:7e580af973bb389ec1d1378a1850742f",
        ],
        "description": "Official evaluation data for IWSLT 2017 (TED talks).",
        "citation": "Overview of the IWSLT 2017 Evaluation Campaign",
        "pairs": _iwslt17(),
        "counts": {},
    },
]
