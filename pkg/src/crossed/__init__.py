"""Produits croisés diagonaux et double de Drinfeld"""
