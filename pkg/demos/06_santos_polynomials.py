"""Andrews-Santos polynomials, including negative indices as rational functions."""

from qgordon.santos import p2_sides, santos_S, santos_T, verify_p1, verify_p2

for m in range(-3, 5):
    print(f"S_{m} = {santos_S(m).render():40}  T_{m} = {santos_T(m).render()}")

# with a negative index on the right the sides are rational; equality is exact
lhs, rhs = p2_sides(5, 7)
print(lhs.render())
print(lhs == rhs)

print(verify_p1(12, 5).summary_line())
print(verify_p2(12, (-6, 8)).summary_line())
