"""Tabulate tunnel slope sequences for a few 2-bridge knots K(a, b)."""

from tunnel_slopes import (
    Rejection,
    find_two_bridge,
    format_slopes,
    parse_slopes,
    semisimple_slopes_closed_form,
    two_bridge_tunnels,
)


def show(a, b):
    report = two_bridge_tunnels(a, b)
    print(f"K( {a}, {b} )")
    print(f"  upper simple tunnel     : {format_slopes(report.upper_simple)}")
    print(f"  upper semisimple tunnel : {format_slopes(report.upper_semisimple)}")
    print(f"  lower simple tunnel     : {format_slopes(report.lower_simple)}")
    print(f"  lower semisimple tunnel : {format_slopes(report.lower_semisimple)}")


def main():
    for a, b in [(7, 2), (25, 7), (413, 227)]:
        show(a, b)
        print()

    # The recognizer inverts the closed form: feed it a semisimple sequence
    # and it names the knot together with the dual description.
    seq = semisimple_slopes_closed_form(413, 227)
    print(f"recognizing {format_slopes(seq)} ...")
    primary, dual = find_two_bridge(seq)
    print(f"  upper semisimple tunnel of K( {primary.a}, {primary.b} )")
    print(f"  lower semisimple tunnel of K( {dual.a}, {dual.b} )")
    print()

    # Sequences outside the family are rejected with the failing condition.
    result = find_two_bridge(parse_slopes("1 3 15 11 9 5"))
    assert isinstance(result, Rejection)
    print(f"rejected ({result.condition}): {result.message}")


if __name__ == "__main__":
    main()
