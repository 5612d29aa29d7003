"""
Pages Package
Comandos da linha de comando: describe, abelian, verify e spectrum
"""
