"""
Тесты clique-powers.
"""
