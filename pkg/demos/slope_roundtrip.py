"""Walk a braid word to its slope sequences and back again."""

from tunnel_slopes import (
    braid_from_slopes,
    dual_slopes,
    format_slopes,
    format_word,
    lower_slopes,
    parse_word,
    upper_slopes,
)


def main():
    text = "m 3 s -2 l 3 s -4 m -1 s -4 l 3"
    braid = parse_word(text)
    print(f"braid word     : {text}")

    upper = upper_slopes(braid)
    lower = lower_slopes(braid)
    print(f"upper slopes   : {format_slopes(upper)}")
    print(f"lower slopes   : {format_slopes(lower)}")

    # Any braid built from the upper sequence describes the same position,
    # even though the word itself need not match the one we started from.
    rebuilt = braid_from_slopes(upper)
    print(f"rebuilt braid  : {format_word(rebuilt)}")
    assert upper_slopes(rebuilt) == upper
    assert lower_slopes(rebuilt) == lower
    print("round trip     : upper and lower slopes both match")

    # The dual computation crosses from one tunnel to the other directly.
    assert dual_slopes(upper) == lower
    assert dual_slopes(lower) == upper
    print("dual slopes    : involution confirmed")


if __name__ == "__main__":
    main()
