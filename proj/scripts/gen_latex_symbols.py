#!/usr/bin/env python3
"""Builds the LaTeX command inventory used by the ASCII-math keyword gate.

Command names are harvested from the macro tables shipped with common LaTeX
tooling: pylatexenc 2.10, matplotlib mathtext, mathjax-full 3.2.2, KaTeX 0.16.9,
@unified-latex/unified-latex-ctan 1.8.4, plasTeX 3.1, unicodeit 0.7.5 and
the unimathsymbols.txt table bundled with latex2mathml 3.81.1.
Only names made of two or more ASCII letters are kept.

usage: gen_latex_symbols.py OUT.hpp SOURCE_DIR...
"""
import glob
import os
import re
import sys

PATTERNS = [
    re.compile(r'\\\\([A-Za-z]{2,})\b'),          # "\\frac" inside JS/TS/Python strings
    re.compile(r"r['\"]\\([A-Za-z]{2,})\b"),      # r'\frac' python raw strings
]


def harvest(root):
    names = set()
    for path in glob.glob(os.path.join(root, '**', '*'), recursive=True):
        if not path.endswith(('.py', '.js', '.ts', '.cjs')) or path.endswith('.map'):
            continue
        with open(path, encoding='utf8', errors='replace') as fh:
            text = fh.read()
        for pat in PATTERNS:
            names.update(m.group(1) for m in pat.finditer(text))
    return names


# colour and tikz tables hold option names, not commands
SKIP_PACKAGES = ('xcolor', 'tikz')
MACRO_KEY = re.compile(r'^\s+"?([A-Za-z]{2,})"?: \{\s*(?:signature|renderInfo)', re.M)
CLASS_DEF = re.compile(r'^class ([A-Za-z]{2,})\(', re.M)
OBJ_KEY = re.compile(r'^\s+"?([A-Za-z]{2,})"?: [{\[\'"A-Za-z]', re.M)


def harvest_unimath(root):
    """Fields 2 and 3 (LaTeX and unicode-math commands) of unimathsymbols.txt."""
    names = set()
    for path in glob.glob(os.path.join(root, '**', 'unimathsymbols.txt'), recursive=True):
        with open(path, encoding='utf8') as fh:
            for line in fh:
                if line.startswith('#'):
                    continue
                fields = line.split('^')
                for f in fields[2:4]:
                    names.update(re.findall(r'\\([A-Za-z]{2,})\b', f))
    return names


def harvest_definitions(root):
    """Command names declared as plasTeX classes or as macro-table keys."""
    names = set()
    for path in glob.glob(os.path.join(root, '**', '*'), recursive=True):
        base = os.path.basename(path)
        if path.endswith('.py') and os.sep + 'plasTeX' + os.sep in path:
            pat = CLASS_DEF
        elif base.endswith('Mappings.ts'):
            pat = OBJ_KEY
        elif base == 'index.js' and not any(p in path for p in SKIP_PACKAGES):
            pat = MACRO_KEY
        else:
            continue
        with open(path, encoding='utf8', errors='replace') as fh:
            found = pat.findall(fh.read())
        if pat is CLASS_DEF:
            # capitalised classes are mostly helpers (FooStar, BarEnvironment);
            # such names are kept only when another table lists them too
            plastex.update(n for n in found if n[0].isupper())
            found = [n for n in found if not n[0].isupper()]
        names.update(found)
    return names


plastex = set()


# prefixes worth counting even though no table lists them as commands
SEED = {'eq'}


def main():
    out, roots = sys.argv[1], sys.argv[2:]
    names = set(SEED)
    for root in roots:
        names |= harvest(root)
        names |= harvest_definitions(root)
        names |= harvest_unimath(root)
    names |= {n for n in plastex if n in names}
    try:
        import matplotlib._mathtext_data as mt
        names |= {k for k in mt.tex2uni if re.fullmatch(r'[A-Za-z]{2,}', k)}
    except ImportError:
        pass
    names = sorted(names)
    with open(out, 'w', encoding='utf8') as fh:
        fh.write('// Generated by scripts/gen_latex_symbols.py; do not edit.\n')
        fh.write('#pragma once\n\n#include <array>\n#include <string_view>\n\n')
        fh.write('namespace webcurate::math {\n\n')
        fh.write(f'inline constexpr std::array<std::string_view, {len(names)}> kLatexCommandInventory = {{\n')
        for n in names:
            fh.write(f'    "\\\\{n}",\n')
        fh.write('};\n\n}  // namespace webcurate::math\n')
    print(len(names), 'commands')


if __name__ == '__main__':
    main()
