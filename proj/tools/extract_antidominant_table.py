"""Regenerate src/antidominant_table.cpp from the anti-dominant weight table in a LaTeX source."""
import re
import sys


def norm(tex):
    tex = tex.replace('\\small', '').replace('$', '').strip()
    arg = r'(?:\{(\d+)\}|(\d))'
    tex = re.sub(r'\\frac' + arg + arg, lambda m: f'{m[1] or m[2]}/{m[3] or m[4]}', tex)
    tex = re.sub(r'\{\\Small\s*([^{}]*?)\s*\}', r'\1', tex)
    return tex.replace(' ', '')


def main(path):
    text = open(path).read()
    body = text[text.index('Anti-dominant weights'):]
    body = body[:body.index('\\end{tikzpicture}')]
    cols, arrows = {}, {}
    for line in body.splitlines():
        m = re.match(r'\\node(?: \[\w+\])? at \((\d+),(-?[\d.]+)\)\s*\{(.*)\};', line)
        if m and '|' in m.group(3):
            cols.setdefault(int(m.group(1)), []).append(norm(m.group(3)))
        m = re.match(r'\\draw \[(.*?)\]\s*\[->\] \((\d+),(-?[\d.]+)\)', line)
        if m and float(m.group(3)) > -14:
            style = m.group(1)
            colour = 'DeltaPlusE1' if 'lightgray' in style else 'DeltaPlusE2' if 'magenta' in style else 'DeltaMinusE3'
            arrows.setdefault(int(m.group(2)), []).append(colour)
    out = ['#include "g3/antidominant_table.hpp"', '', 'namespace g3 {', '',
           'const std::vector<AntidominantColumn>& antidominant_snapshot() {',
           '  using enum ArrowRoot;',
           '  static const std::vector<AntidominantColumn> table = {']
    for x in sorted(cols):
        entries = ', '.join(f'"{s}"' for s in cols[x])
        arr = ', '.join(arrows[x][:len(cols[x]) - 1])
        out.append(f'      {{{x // 4}, {{{entries}}},')
        out.append(f'       {{{arr}}}}},')
    out += ['  };', '  return table;', '}', '', '}  // namespace g3', '']
    sys.stdout.write('\n'.join(out))


if __name__ == '__main__':
    main(sys.argv[1])
