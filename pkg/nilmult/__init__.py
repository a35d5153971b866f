"""
Nilpotent multiplier toolkit: exact computation and exhaustive verification
for c-nilpotent multipliers of finite abelian groups.
"""
__version__ = '0.1.0'
