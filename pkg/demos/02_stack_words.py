"""
Stack words and the series machine
==================================

Passing a permutation through t stacks in series under a greedy rule
records a word: n copies of each of t+1 move letters (A = input push,
D = final emit for t = 3). The word of a sortable permutation determines
it completely, certain letter patterns can never occur, and counting how
the missing A's can be reinserted into the projected word yields an upper
bound for the 3-stack sortable count.

Run:  python3 demos/02_stack_words.py
"""
from stackwords import (
    count_factor,
    decode,
    descent_count,
    encode,
    enumerate_a_placements,
    forbidden_factor_violations,
    format_permutation,
    image_word,
    is_genuine_word,
    run_series_machine,
    stack_sort,
    validate_word,
)

print("The series machine, step by step, for 231 through 3 stacks:")
run = run_series_machine((2, 3, 1), 3, record_steps=True)
for step in run.steps:
    stacks = "  ".join("S%d=%s" % (i + 1, list(s) or "[]") for i, s in enumerate(step.stacks))
    print(f"  step {step.step:2d}: {step.letter} moves {step.value}   {stacks}   out={list(step.output)}")
print(f"  word: {run.word}   output: {format_permutation(run.output)}")

print()
print("Words encode descents: each AA factor marks one descent of the input.")
for p in [(1, 2, 3), (2, 1, 3), (3, 2, 1)]:
    w = encode(p, 3)
    print(f"  {format_permutation(p)}: word {w}, AA factors {count_factor(w, 'AA')}, descents {descent_count(p)}")

print()
print("Seven factors can never appear in a trace; a scan of any trace comes back clean:")
w = encode((2, 3, 4, 1), 3)
print(f"  trace of 2341: {w}, violations: {forbidden_factor_violations(w)}")
bad = validate_word("AABBCCDD", 3)
print(f"  handmade ballot word {bad}: violations {forbidden_factor_violations(bad)}")
print(f"  ... and indeed it is nobody's trace: is_genuine_word -> {is_genuine_word(bad)}")

print()
print("Dropping the A's projects a trace onto the word of the once-sorted image:")
p = (2, 3, 4, 1)
w = encode(p, 3)
v = image_word(w)
print(f"  word of {format_permutation(p)}: {w}")
print(f"  projection: {v} (this is the 2-stack word of {format_permutation(stack_sort(p))})")
print(f"  decoding the projection: {format_permutation(decode(v))}")

print()
print("Reinserting the A's: candidates for traces that project onto v.")
print("Two A's are forced into every BB factor, one in front of the first B;")
print("the rest may only follow a non-final B or precede the first one.")
candidates = list(enumerate_a_placements(v, 4))
genuine = sum(1 for c in candidates if is_genuine_word(c))
for c in candidates[:6]:
    mark = "genuine trace" if is_genuine_word(c) else "not a trace"
    print(f"  {c}  ({mark})")
print(f"  ... {len(candidates)} candidates total, {genuine} of them genuine.")
print("Counting candidates instead of traces is exactly what the 3-stack")
print("upper bound does - see demos/03_exact_counting.py.")
